#pragma once

// The mvlab command line, callable in-process.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage or
// domain error (one-line diagnostic on the error stream).

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace mvlab {

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// --cache-dir if non-empty, else $MVLAB_CACHE, else $XDG_DATA_HOME/mvlab,
// else $HOME/.local/share/mvlab, else ./.mvlab-cache.
std::filesystem::path resolve_cache_dir(const std::string& flag);

// agn-<method>-g<G>-n<N>.tsv
std::string cache_file_name(const std::string& method, int gmax, int nmax);

} // namespace mvlab

#include "mvlab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvlab/agn.hpp"
#include "mvlab/asymptotics.hpp"
#include "mvlab/error.hpp"
#include "mvlab/genus.hpp"
#include "mvlab/suites.hpp"
#include "mvlab/volumes.hpp"

namespace mvlab {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::filesystem::path resolve_cache_dir(const std::string& flag)
{
    if (!flag.empty()) {
        return flag;
    }
    auto env = [](const char* name) -> std::string {
        const char* v = std::getenv(name);
        return v ? std::string(v) : std::string();
    };
    if (const auto v = env("MVLAB_CACHE"); !v.empty()) {
        return v;
    }
    if (const auto v = env("XDG_DATA_HOME"); !v.empty()) {
        return fs::path(v) / "mvlab";
    }
    if (const auto v = env("HOME"); !v.empty()) {
        return fs::path(v) / ".local" / "share" / "mvlab";
    }
    return ".mvlab-cache";
}

std::string cache_file_name(const std::string& method, int gmax, int nmax)
{
    return "agn-" + method + "-g" + std::to_string(gmax) + "-n" + std::to_string(nmax) + ".tsv";
}

namespace {

enum class Format { plain, json, csv };

struct CacheFile {
    fs::path path;
    std::string method;
    int gmax = 0;
    int nmax = 0;
};

std::vector<CacheFile> cache_files(const fs::path& dir)
{
    static const std::regex pattern(R"(agn-(direct|alternative|series)-g(\d+)-n(\d+)\.tsv)");
    std::vector<CacheFile> out;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        return out;
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::smatch m;
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && std::regex_match(name, m, pattern)) {
            out.push_back({entry.path(), m[1].str(), std::stoi(m[2].str()), std::stoi(m[3].str())});
        }
    }
    std::sort(out.begin(), out.end(), [](const CacheFile& a, const CacheFile& b) { return a.path < b.path; });
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out << (i ? "," : "") << csv_field(fields[i]);
    }
    out << '\n';
}

std::string decimal(const BigFloat& v, int digits = 15)
{
    return v.to_string(digits);
}

class Cli {
public:
    Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args)
    {
        CLI::App app{"Exact Masur-Veech volumes, Siegel-Veech constants and their large-genus asymptotics", "mvlab"};
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--format", format_name_, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
        app.add_option("--cache-dir", cache_dir_, "Cache directory (default: $MVLAB_CACHE, then the user data dir)");

        auto* agn = app.add_subcommand("agn", "Print a_{g,n}");
        agn->add_option("--g", g_)->required()->check(CLI::NonNegativeNumber);
        agn->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
        agn->add_option("--method", method_, "direct, alt or series")->check(CLI::IsMember({"direct", "alt", "alternative", "series"}));

        auto* table = app.add_subcommand("table", "Build and persist the a_{g,n} table");
        table->add_option("--gmax", gmax_opt_, "Largest genus")->required()->check(CLI::NonNegativeNumber);
        table->add_option("--nmax", nmax_, "Largest n")->required()->check(CLI::NonNegativeNumber);
        table->add_option("--method", method_, "direct, alt or series")->check(CLI::IsMember({"direct", "alt", "alternative", "series"}));
        table->add_option("--out", out_path_, "Output file (default: the cache directory)");

        auto* volume_cmd = app.add_subcommand("volume", "Masur-Veech volume of Q_{g,n}");
        volume_cmd->add_option("--g", g_)->required()->check(CLI::NonNegativeNumber);
        volume_cmd->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
        volume_cmd->add_option("--numeric", numeric_bits_, "Also print a decimal value at this precision in bits");

        auto* sv = app.add_subcommand("sv", "Area Siegel-Veech constant of Q_{g,n}");
        sv->add_option("--g", g_)->required()->check(CLI::NonNegativeNumber);
        sv->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
        sv->add_option("--numeric", numeric_bits_, "Also print a decimal value at this precision in bits");

        auto* genus = app.add_subcommand("genus", "Print C_{g,j}, j = 0..g");
        genus->add_option("--g", g_)->required()->check(CLI::NonNegativeNumber);

        auto* verify = app.add_subcommand("verify", "Run an invariant suite");
        std::vector<std::string> names(suite_names().begin(), suite_names().end());
        verify->add_option("--suite", suite_, "Suite name")->required()->check(CLI::IsMember(names));
        verify->add_option("--gmax", gmax_opt_, "Override the suite's genus range");

        auto* asym = app.add_subcommand("asym", "Fit the 1/g expansion and compare with the conjectured coefficients");
        asym->add_option("--target", target_, "vol or sv")->check(CLI::IsMember({"vol", "sv"}));
        asym->add_option("--n", n_list_, "Values of n (repeat or comma separated)")->delimiter(',')->check(CLI::NonNegativeNumber);
        asym->add_option("--gmax", asym_gmax_, "Largest genus sampled")->capture_default_str();
        asym->add_option("--order", order_, "Number of fitted correction terms K")->capture_default_str();
        asym->add_option("--bits", bits_, "Working precision in bits")->capture_default_str();

        auto* cache = app.add_subcommand("cache", "Inspect or clear the table cache");
        cache->add_option("--dir", cache_dir_, "Cache directory");
        cache->add_flag("--list", list_, "List cached tables (default)");
        cache->add_flag("--clear", clear_, "Delete cached tables");

        std::vector<const char*> argv{"mvlab"};
        for (const auto& a : args) {
            argv.push_back(a.c_str());
        }
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return 0;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return 0;
        } catch (const CLI::ParseError& e) {
            return fail(e.what());
        }
        format_ = format_name_ == "json" ? Format::json : format_name_ == "csv" ? Format::csv : Format::plain;

        try {
            if (agn->parsed()) {
                return cmd_agn();
            }
            if (table->parsed()) {
                return cmd_table();
            }
            if (volume_cmd->parsed()) {
                return cmd_pi_scaled(volume(g_, n_));
            }
            if (sv->parsed()) {
                return cmd_pi_scaled(sv_constant(g_, n_));
            }
            if (genus->parsed()) {
                return cmd_genus();
            }
            if (verify->parsed()) {
                return cmd_verify();
            }
            if (asym->parsed()) {
                return cmd_asym();
            }
            if (cache->parsed()) {
                return cmd_cache();
            }
        } catch (const std::exception& e) {
            return fail(e.what());
        }
        return fail("no subcommand");
    }

private:
    int fail(const std::string& message)
    {
        std::string line = message;
        std::replace(line.begin(), line.end(), '\n', ' ');
        err_ << "mvlab: error: " << line << '\n';
        return 2;
    }

    std::string method_name() const { return std::string(to_string(parse_agn_method(method_))); }

    std::optional<BigRat> from_cache(AgnMethod method)
    {
        const fs::path dir = resolve_cache_dir(cache_dir_);
        for (const auto& f : cache_files(dir)) {
            if (f.method == to_string(method) && f.gmax >= g_ && f.nmax >= n_) {
                const AgnTable t = load_table(f.path, method);
                if (t.contains(g_, n_)) {
                    return t.at(g_, n_);
                }
            }
        }
        return std::nullopt;
    }

    int cmd_agn()
    {
        const AgnMethod method = parse_agn_method(method_);
        std::optional<BigRat> value = from_cache(method);
        if (!value) {
            switch (method) {
            case AgnMethod::direct:
                value = a_direct(g_, n_);
                break;
            case AgnMethod::alternative:
                value = a_alt(g_, n_);
                break;
            case AgnMethod::series:
                value = agn_from_series(g_, n_);
                break;
            }
        }
        const std::string v = to_fraction_string(*value);
        switch (format_) {
        case Format::plain:
            out_ << v << '\n';
            break;
        case Format::json:
            out_ << Json{{"g", g_}, {"n", n_}, {"value", v}}.dump() << '\n';
            break;
        case Format::csv:
            csv_row(out_, {"g", "n", "value"});
            csv_row(out_, {std::to_string(g_), std::to_string(n_), v});
            break;
        }
        return 0;
    }

    int cmd_table()
    {
        const AgnMethod method = parse_agn_method(method_);
        const AgnTable t = build_table(gmax_opt_, nmax_, method);
        fs::path path = out_path_;
        if (path.empty()) {
            const fs::path dir = resolve_cache_dir(cache_dir_);
            fs::create_directories(dir);
            path = dir / cache_file_name(std::string(to_string(method)), gmax_opt_, nmax_);
        }
        save_table(t, path);
        const std::string m(to_string(method));
        switch (format_) {
        case Format::plain:
            out_ << "wrote " << t.size() << " entries (" << m << ") to " << path.string() << '\n';
            break;
        case Format::json:
            out_ << Json{{"gmax", gmax_opt_}, {"nmax", nmax_}, {"method", m}, {"entries", t.size()}, {"path", path.string()}}.dump()
                 << '\n';
            break;
        case Format::csv:
            csv_row(out_, {"gmax", "nmax", "method", "entries", "path"});
            csv_row(out_, {std::to_string(gmax_opt_), std::to_string(nmax_), m, std::to_string(t.size()), path.string()});
            break;
        }
        return 0;
    }

    int cmd_pi_scaled(const PiScaled& v)
    {
        std::optional<std::string> approx;
        if (numeric_bits_) {
            approx = decimal(v.numeric(*numeric_bits_), decimal_digits(*numeric_bits_));
        }
        const std::string coeff = to_fraction_string(v.coeff);
        Json j;
        if (format_ == Format::json) {
            j["g"] = g_;
            j["n"] = n_;
        }
        j["coeff"] = coeff;
        j["pi_half_exponent"] = v.pi_half_exponent;
        if (approx) {
            j["approx"] = *approx;
        }
        if (format_ == Format::csv) {
            std::vector<std::string> head{"g", "n", "coeff", "pi_half_exponent"};
            std::vector<std::string> row{std::to_string(g_), std::to_string(n_), coeff, std::to_string(v.pi_half_exponent)};
            if (approx) {
                head.push_back("approx");
                row.push_back(*approx);
            }
            csv_row(out_, head);
            csv_row(out_, row);
        } else {
            out_ << j.dump() << '\n';
        }
        return 0;
    }

    int cmd_genus()
    {
        const GenusCoeffs c = coeffs_C(g_);
        switch (format_) {
        case Format::plain:
            for (int j = 0; j <= g_; ++j) {
                out_ << j << '\t' << to_fraction_string(c.C[j]) << '\n';
            }
            break;
        case Format::json: {
            Json arr = Json::array();
            for (const auto& v : c.C) {
                arr.push_back(to_fraction_string(v));
            }
            out_ << Json{{"g", g_}, {"C", arr}}.dump() << '\n';
            break;
        }
        case Format::csv:
            csv_row(out_, {"g", "j", "value"});
            for (int j = 0; j <= g_; ++j) {
                csv_row(out_, {std::to_string(g_), std::to_string(j), to_fraction_string(c.C[j])});
            }
            break;
        }
        return 0;
    }

    int cmd_verify()
    {
        const SuiteResult r = run_suite(suite_, gmax_given() ? std::optional<int>(gmax_opt_) : std::nullopt);
        switch (format_) {
        case Format::plain:
            for (const auto& c : r.cases) {
                if (!c.pass) {
                    out_ << "FAIL " << c.name << ": expected " << c.expected << ", got " << c.actual << '\n';
                }
            }
            out_ << r.suite << ": " << r.summary << (r.pass ? "" : " (FAILED)") << '\n';
            break;
        case Format::json: {
            Json cases = Json::array();
            for (const auto& c : r.cases) {
                cases.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
            }
            out_ << Json{{"suite", r.suite}, {"cases", cases}, {"summary", r.summary}, {"pass", r.pass}}.dump() << '\n';
            break;
        }
        case Format::csv:
            csv_row(out_, {"suite", "name", "expected", "actual", "pass"});
            for (const auto& c : r.cases) {
                csv_row(out_, {r.suite, c.name, c.expected, c.actual, c.pass ? "true" : "false"});
            }
            break;
        }
        return r.pass ? 0 : 1;
    }

    int cmd_asym()
    {
        const AsymTarget target = parse_asym_target(target_);
        const CompareReport r = compare_report(target, n_list_, asym_gmax_, order_, bits_);
        const std::string t(to_string(target));
        switch (format_) {
        case Format::plain: {
            std::size_t ok = 0;
            for (const auto& row : r.rows) {
                ok += row.pass ? 1 : 0;
                out_ << "n=" << row.n << " k=" << row.k << "  est " << decimal(row.estimate, 12) << " +- "
                     << decimal(row.error, 2) << "  lsq " << decimal(row.least_squares, 12) << "  ref "
                     << decimal(row.reference, 12) << "  dev " << decimal(row.deviation, 2) << "  [" << row.criterion
                     << "] " << (row.pass ? "PASS" : "FAIL") << '\n';
            }
            out_ << t << ": " << ok << "/" << r.rows.size() << " rows pass (gmax " << r.gmax << ", order " << r.K << ", "
                 << r.bits << " bits)" << (r.widened ? ", short window: error bars widened" : "") << '\n';
            break;
        }
        case Format::json: {
            Json cases = Json::array();
            for (const auto& row : r.rows) {
                cases.push_back(Json{{"n", row.n},
                                     {"k", row.k},
                                     {"estimate", decimal(row.estimate)},
                                     {"error", decimal(row.error, 3)},
                                     {"least_squares", decimal(row.least_squares)},
                                     {"reference", decimal(row.reference)},
                                     {"deviation", decimal(row.deviation, 3)},
                                     {"criterion", row.criterion},
                                     {"pass", row.pass}});
            }
            out_ << Json{{"target", t}, {"gmax", r.gmax}, {"order", r.K}, {"bits", r.bits}, {"widened", r.widened},
                         {"cases", cases}, {"pass", r.pass}}
                        .dump()
                 << '\n';
            break;
        }
        case Format::csv:
            csv_row(out_, {"target", "n", "k", "estimate", "error", "least_squares", "reference", "deviation", "criterion", "pass"});
            for (const auto& row : r.rows) {
                csv_row(out_, {t, std::to_string(row.n), std::to_string(row.k), decimal(row.estimate), decimal(row.error, 3),
                               decimal(row.least_squares), decimal(row.reference), decimal(row.deviation, 3), row.criterion,
                               row.pass ? "true" : "false"});
            }
            break;
        }
        return r.pass ? 0 : 1;
    }

    int cmd_cache()
    {
        const fs::path dir = resolve_cache_dir(cache_dir_);
        const auto files = cache_files(dir);
        if (clear_) {
            for (const auto& f : files) {
                fs::remove(f.path);
            }
            if (format_ == Format::json) {
                out_ << Json{{"dir", dir.string()}, {"removed", files.size()}}.dump() << '\n';
            } else if (format_ == Format::csv) {
                csv_row(out_, {"dir", "removed"});
                csv_row(out_, {dir.string(), std::to_string(files.size())});
            } else {
                out_ << "removed " << files.size() << " table(s) from " << dir.string() << '\n';
            }
            return 0;
        }
        bool ok = true;
        Json arr = Json::array();
        if (format_ == Format::plain) {
            out_ << dir.string() << '\n';
        } else if (format_ == Format::csv) {
            csv_row(out_, {"file", "method", "gmax", "nmax", "entries", "status"});
        }
        for (const auto& f : files) {
            std::string status = "ok";
            std::size_t entries = 0;
            try {
                entries = load_table(f.path, parse_agn_method(f.method)).size();
            } catch (const std::exception& e) {
                status = e.what();
                ok = false;
            }
            const std::string name = f.path.filename().string();
            if (format_ == Format::plain) {
                out_ << "  " << name << "  " << entries << " entries  " << status << '\n';
            } else if (format_ == Format::csv) {
                csv_row(out_, {name, f.method, std::to_string(f.gmax), std::to_string(f.nmax), std::to_string(entries), status});
            } else {
                arr.push_back(Json{{"file", name}, {"method", f.method}, {"gmax", f.gmax}, {"nmax", f.nmax},
                                   {"entries", entries}, {"status", status}});
            }
        }
        if (format_ == Format::json) {
            out_ << Json{{"dir", dir.string()}, {"tables", arr}, {"pass", ok}}.dump() << '\n';
        }
        if (!ok) {
            err_ << "mvlab: error: unreadable cache entry in " << dir.string() << '\n';
            return 2;
        }
        return 0;
    }

    bool gmax_given() const { return gmax_opt_ >= 0; }

    std::ostream& out_;
    std::ostream& err_;
    std::string format_name_ = "plain";
    Format format_ = Format::plain;
    std::string cache_dir_;
    int g_ = 0;
    int n_ = 0;
    std::string method_ = "direct";
    int gmax_opt_ = -1;
    int nmax_ = 0;
    std::string out_path_;
    std::optional<long> numeric_bits_;
    std::string suite_;
    std::string target_ = "vol";
    std::vector<int> n_list_{0};
    int asym_gmax_ = asym_reference_gmax;
    int order_ = 5;
    long bits_ = BigFloat::default_bits;
    bool list_ = false;
    bool clear_ = false;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Cli cli(out, err);
    return cli.run(args);
}

} // namespace mvlab

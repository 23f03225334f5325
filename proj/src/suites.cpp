#include "mvlab/suites.hpp"

#include <algorithm>

#include "mvlab/agn.hpp"
#include "mvlab/error.hpp"
#include "mvlab/funceq.hpp"
#include "mvlab/genus.hpp"
#include "mvlab/reference.hpp"
#include "mvlab/volumes.hpp"

namespace mvlab {

namespace {

std::string cell(const std::string& what, int g, int n)
{
    return what + "(" + std::to_string(g) + "," + std::to_string(n) + ")";
}

std::string cell(const std::string& what, int g)
{
    return what + "(" + std::to_string(g) + ")";
}

void add(SuiteResult& r, std::string name, const BigRat& expected, const BigRat& actual)
{
    r.cases.push_back({std::move(name), to_fraction_string(expected), to_fraction_string(actual), expected == actual});
}

void add(SuiteResult& r, std::string name, const std::string& expected, const std::string& actual)
{
    r.cases.push_back({std::move(name), expected, actual, expected == actual});
}

void finish(SuiteResult& r, const std::string& noun)
{
    const auto ok = std::count_if(r.cases.begin(), r.cases.end(), [](const SuiteCase& c) { return c.pass; });
    r.pass = !r.cases.empty() && ok == static_cast<long>(r.cases.size());
    r.summary = std::to_string(ok) + "/" + std::to_string(r.cases.size()) + " " + noun;
}

void require_range(int gmax, int lo)
{
    if (gmax < lo) {
        throw domain_error("suite range gmax must be >= " + std::to_string(lo));
    }
}

SuiteResult table1()
{
    SuiteResult r{"table1", {}, {}, false};
    const AgnTable t = build_table(4, 6, AgnMethod::direct);
    for (const auto& [key, v] : published_agn()) {
        add(r, cell("a", key.first, key.second), v, t.at(key.first, key.second));
    }
    finish(r, "entries match");
    return r;
}

SuiteResult paths(int gmax)
{
    require_range(gmax, 0);
    SuiteResult r{"paths", {}, {}, false};
    for (int g = 0; g <= gmax; ++g) {
        for (int n = 0; n <= 8; ++n) {
            const BigRat d = a_direct(g, n);
            const BigRat s = agn_from_series(g, n);
            std::string actual = "series=" + to_fraction_string(s);
            bool ok = d == s;
            if (n >= 2) {
                const BigRat a = a_alt(g, n);
                actual += " alt=" + to_fraction_string(a);
                ok = ok && d == a;
            }
            r.cases.push_back({cell("a", g, n), "direct=" + to_fraction_string(d), actual, ok});
        }
    }
    finish(r, "cells agree");
    return r;
}

SuiteResult funceq(int gmax)
{
    require_range(gmax, 1);
    SuiteResult r{"funceq", {}, {}, false};
    const int nx = 8;
    const FunctionalEqReport rep = verify_functional_eqs(nx, gmax);
    for (const auto& e : rep.equations) {
        r.cases.push_back({e.equation, "0 nonzero", std::to_string(e.nonzero) + " nonzero of " + std::to_string(e.checked),
                           e.nonzero == 0 && e.checked > 0});
    }
    const AgnTable broken = build_table(gmax, funceq_table_nmax(nx, gmax), AgnMethod::direct)
                                .with_entry(1, 1, make_rat(1, 11));
    const FunctionalEqReport bad = verify_functional_eqs(nx, gmax, broken);
    r.cases.push_back({"a(1,1)=1/11 rejected", "fail", bad.pass ? "pass" : "fail", !bad.pass});
    finish(r, "checks pass");
    return r;
}

SuiteResult closed(int gmax)
{
    require_range(gmax, 2);
    SuiteResult r{"closed", {}, {}, false};
    for (int n = 3; n <= 15; ++n) {
        const PiScaled v = volume(0, n);
        const PiScaled c = volume_closed_g0(n);
        r.cases.push_back({cell("vol", 0, n), to_string(c), to_string(v), v == c});
    }
    for (int n = 1; n <= 15; ++n) {
        const PiScaled v = volume(1, n);
        const PiScaled c = volume_closed_g1(n);
        r.cases.push_back({cell("vol", 1, n), to_string(c), to_string(v), v == c});
    }
    for (int g = 0; g <= 2; ++g) {
        const GenusBlock h = closed_H(g);
        LaurentT d = derivative(h);
        for (int n = 0; n <= 8; ++n) {
            BigRat value;
            if (n == 0) {
                value = h.laurent.at_one();
            } else {
                value = d.at_one();
                d = laurent_dt(d, 1);
            }
            add(r, cell("H", g, n), a_direct(g, n), value);
        }
    }
    for (int g = 2; g <= gmax; ++g) {
        const LaurentT res = genus_ode_residual(g);
        add(r, cell("genus-ode", g), "0", res.is_zero() ? std::string("0") : res.to_string());
    }
    finish(r, "checks pass");
    return r;
}

SuiteResult lambda(int gmax)
{
    require_range(gmax, 2);
    SuiteResult r{"lambda", {}, {}, false};
    for (int g = 2; g <= gmax; ++g) {
        add(r, cell("C", g, g), lambda_g_value(g), coeffs_C(g).C[g]);
    }
    finish(r, "values match");
    return r;
}

SuiteResult iz(int gmax)
{
    require_range(gmax, 2);
    SuiteResult r{"iz", {}, {}, false};
    add(r, "c(2)", BigRat(98), cg_seq(2));
    add(r, "c(3)", BigRat(19600), cg_seq(3));
    for (int g = 2; g <= gmax; ++g) {
        const BigRat iz_value = cg_seq(g) / (BigRat(pow_int(24, g)) * ((5 * g - 3) * (5 * g - 5)));
        add(r, cell("C", g, 0), iz_value, coeffs_C(g).C[0]);
    }
    finish(r, "values match");
    return r;
}

SuiteResult upath(int gmax)
{
    require_range(gmax, 2);
    SuiteResult r{"upath", {}, {}, false};
    for (int g = 0; g <= gmax; ++g) {
        const LaurentT a = u_direct(g);
        const LaurentT b = u_from_tilde(g);
        r.cases.push_back({cell("u", g), b.to_string(), a.to_string(), a == b});
    }
    for (int g = 2; g <= gmax; ++g) {
        const auto c = coeffs_C(g);
        const auto k = kazarian_c(g);
        for (int j = 0; j <= g; ++j) {
            add(r, cell("c", g, j), c.C[j] * ((5 * g - 5 - j) * (5 * g - 3 - j)), k[j]);
        }
    }
    finish(r, "checks pass");
    return r;
}

} // namespace

const std::vector<std::string_view>& suite_names()
{
    static const std::vector<std::string_view> names{"table1", "paths", "funceq", "closed", "lambda", "iz", "upath"};
    return names;
}

SuiteResult run_suite(std::string_view name, std::optional<int> gmax)
{
    if (name == "table1") {
        return table1();
    }
    if (name == "paths") {
        return paths(gmax.value_or(15));
    }
    if (name == "funceq") {
        return funceq(gmax.value_or(4));
    }
    if (name == "closed") {
        return closed(gmax.value_or(10));
    }
    if (name == "lambda") {
        return lambda(gmax.value_or(20));
    }
    if (name == "iz") {
        return iz(gmax.value_or(20));
    }
    if (name == "upath") {
        return upath(gmax.value_or(20));
    }
    throw domain_error("unknown suite '" + std::string(name) + "'");
}

} // namespace mvlab

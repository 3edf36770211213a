#ifndef MOTIVIC_TOOLS_CLI_HPP
#define MOTIVIC_TOOLS_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <motivic/motivic.hpp>

namespace motivic::cli
{

using Json = nlohmann::json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed_check = 1;
inline constexpr int exit_usage = 2;

namespace detail
{

inline std::uint64_t enumeration_budget()
{
    const char *env = std::getenv("MOTIVIC_BUDGET");
    if (env == nullptr || *env == '\0') {
        return default_enumeration_budget;
    }
    const std::string s(env);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size() || s.front() == '-') {
        throw Error(ErrorCode::invalid_argument, "MOTIVIC_BUDGET must be a positive integer, got '" + s + "'");
    }
    return v;
}

inline std::int64_t parse_int(const std::string &s)
{
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw Error(ErrorCode::parse_error, "expected an integer, got '" + s + "'");
    }
    return v;
}

// "+inf", "inf" or an integer.
inline Order parse_order(const std::string &s)
{
    if (s == "inf" || s == "+inf") {
        return Order::infinity();
    }
    return Order::finite(parse_int(s));
}

inline Group parse_group(const std::string &s)
{
    if (s == "G") {
        return Group::G;
    }
    if (s == "H") {
        return Group::H;
    }
    throw Error(ErrorCode::parse_error, "group must be G or H");
}

inline Json matrix_json(const FpMatrix &m)
{
    return Json(m.rows());
}

inline Json polys_json(const std::vector<FpPolynomial> &fs, const std::vector<std::string> &names)
{
    Json out = Json::array();
    for (const auto &f : fs) {
        out.push_back(f.to_string(names));
    }
    return out;
}

inline std::string law_name(CoactionLaw l)
{
    return l == CoactionLaw::counit ? "counit" : "coassociativity";
}

// Shared flag values; each subcommand reads only its own.
struct Flags {
    bool json = false;
    std::int64_t p = 0;
    std::string d;
    std::string variant = "sht";
    std::string domain = "H";
    std::optional<std::int64_t> truncate;
    std::string j;
    std::int64_t level = 0;
    std::string cls;
    std::string group;
    std::string ord;
    std::uint32_t maxdeg = 2;
    std::string poly;
    std::string example;
    std::int64_t q = 0;
    std::string value;
    std::string which;
    std::int64_t jmax = 1000;
    std::string stratum;
    bool quick = false;
    std::int64_t fault = 0;
    bool timings = false;
};

class Runner
{
public:
    explicit Runner(std::ostream &out) : out_(out) {}

    int dispatch(const CLI::App &app, const Flags &f)
    {
        for (const auto *sub : app.get_subcommands()) {
            const auto name = sub->get_name();
            if (name == "stringy") {
                return stringy(f);
            }
            if (name == "selftest") {
                return selftest(f);
            }
            const auto inner = sub->get_subcommands();
            if (inner.empty()) {
                break;
            }
            const auto leaf = inner.front()->get_name();
            if (name == "moduli") {
                return moduli(leaf, f);
            }
            if (name == "rep") {
                return rep(leaf, f);
            }
            if (name == "quotient") {
                return quotient(leaf, f);
            }
            if (name == "covars") {
                return covars(leaf, f);
            }
        }
        throw CLI::CallForHelp();
    }

private:
    void emit(const Flags &f, const Json &j, const std::string &text)
    {
        if (f.json) {
            out_ << j.dump() << '\n';
        } else {
            out_ << text << '\n';
        }
    }

    void emit_value(const Flags &f, const MotivicValue &v)
    {
        emit(f, to_json(v), render(v));
    }

    int stringy(const Flags &f)
    {
        const Prime p(f.p);
        const auto d = DimSeq::parse(f.d, p);
        IntegrandVariant v{};
        if (f.variant == "sht") {
            v.tag = Variant::sht;
        } else if (f.variant == "sht-prime") {
            v.tag = Variant::sht_prime;
        } else {
            throw Error(ErrorCode::parse_error, "variant must be sht or sht-prime");
        }
        v.domain = parse_group(f.domain);
        if (f.truncate) {
            const auto s = stringy_integral_truncated(d, v, *f.truncate);
            emit(f, to_json(s), render(s));
        } else {
            emit_value(f, stringy_integral(d, v));
        }
        return exit_ok;
    }

    int moduli(const std::string &leaf, const Flags &f)
    {
        const Prime p(f.p);
        if (leaf == "stratum") {
            const auto s = f.j == "zero" ? StratumH::zero(p) : StratumH::order(parse_int(f.j), p);
            emit_value(f, stratum_class_H(s));
        } else if (leaf == "measure-g") {
            if (f.level < 0) {
                throw Error(ErrorCode::invalid_argument, "level must be >= 0");
            }
            emit_value(f, cylinder_measure_G(CylinderG{f.level, parse_motivic_value(f.cls), p}));
        } else {
            const TorsorClass t(parse_group(f.group), parse_order(f.ord), p);
            const auto text = torsor_presentation(t);
            emit(f, Json{{"group", group_name(t.group())}, {"order", t.order().to_string()}, {"presentation", text}},
                 text);
        }
        return exit_ok;
    }

    int rep(const std::string &leaf, const Flags &f)
    {
        const Prime p(f.p);
        const auto d = DimSeq::parse(f.d, p);
        const auto xi = jordan_nilpotent(d);
        const auto names = default_variable_names(xi.dim());
        if (leaf == "jordan") {
            emit(f, matrix_json(xi), xi.to_string());
        } else if (leaf == "coaction") {
            const auto phi = coaction(xi);
            Json comps = Json::array();
            for (const auto &c : phi.components()) {
                comps.push_back(matrix_json(c));
            }
            emit(f, Json{{"components", comps}}, phi.to_string());
        } else if (leaf == "check-axioms") {
            const auto r = check_coaction_axioms(xi);
            Json j{{"counit", r.counit}, {"coassociative", r.coassociative}, {"passed", r.passed()}};
            std::string text = std::string("counit: ") + (r.counit ? "ok" : "FAILED") +
                               "\ncoassociativity: " + (r.coassociative ? "ok" : "FAILED");
            if (r.first_failure) {
                const auto &v = *r.first_failure;
                j["first_failure"] = Json{{"law", law_name(v.law)}, {"i", v.eps1_power}, {"j", v.eps2_power},
                                          {"row", v.row}, {"col", v.col}, {"expected", v.expected},
                                          {"actual", v.actual}};
                text += "\nfirst failure: " + law_name(v.law) + " at eps1^" + std::to_string(v.eps1_power) +
                        " eps2^" + std::to_string(v.eps2_power) + ", entry (" + std::to_string(v.row) + "," +
                        std::to_string(v.col) + ")";
            }
            emit(f, j, text);
            return r.passed() ? exit_ok : exit_failed_check;
        } else if (leaf == "invariants") {
            const auto basis = invariant_basis(xi, f.maxdeg);
            std::string text;
            for (const auto &g : basis) {
                text += (text.empty() ? "" : "\n") + g.to_string(names);
            }
            emit(f, polys_json(basis, names), text);
        } else {
            const auto g = derivation_apply(xi, parse_polynomial(f.poly, p, xi.dim()));
            emit(f, Json(g.to_string(names)), g.to_string(names));
        }
        return exit_ok;
    }

    int quotient(const std::string &leaf, const Flags &f)
    {
        if (leaf == "list") {
            Json j = Json::array();
            std::string text;
            for (const auto &id : builtin_example_ids()) {
                j.push_back(id);
                text += (text.empty() ? "" : "\n") + id;
            }
            emit(f, j, text);
            return exit_ok;
        }
        if (leaf == "verify") {
            const auto e = make_example(f.example, Prime(f.p));
            const auto res = verify_presentation(e);
            const auto inv = invariance_residuals(e);
            bool ok = res.is_zero();
            std::string text = "relation residual: " + res.to_string(e.ambient_names);
            for (std::size_t k = 0; k < inv.size(); ++k) {
                ok = ok && inv[k].is_zero();
                text += "\ninvariance of " + e.generators[k].to_string(e.ambient_names) + ": " +
                        inv[k].to_string(e.ambient_names);
            }
            emit(f,
                 Json{{"example", e.id}, {"p", e.prime.value()}, {"residual", res.to_string(e.ambient_names)},
                      {"invariance", polys_json(inv, e.ambient_names)}, {"passed", ok}},
                 text);
            return ok ? exit_ok : exit_failed_check;
        }
        const auto pp = prime_power_decomposition(f.q);
        if (!pp) {
            throw Error(ErrorCode::invalid_argument, std::to_string(f.q) + " is not a prime power");
        }
        const auto e = make_example(f.example, pp->prime);
        const auto budget = enumeration_budget();
        if (leaf == "count") {
            const auto c = count_points(e, f.q, budget);
            emit(f, Json{{"example", e.id}, {"q", f.q}, {"count", detail_integer(c)}}, c.str());
            return exit_ok;
        }
        const auto r = specialization_check(parse_motivic_value(f.value), e, f.q, budget);
        emit(f,
             Json{{"example", e.id},
                  {"q", f.q},
                  {"specialized", r.specialized.str()},
                  {"counted", r.counted.str()},
                  {"equal", r.equal}},
             "specialized: " + r.specialized.str() + "\ncounted: " + r.counted.str() +
                 "\nequal: " + (r.equal ? "true" : "false"));
        return r.equal ? exit_ok : exit_failed_check;
    }

    static Json detail_integer(const Integer &c)
    {
        return motivic::detail::integer_to_json(c);
    }

    int covars(const std::string &leaf, const Flags &f)
    {
        const Prime p(f.p);
        if (leaf == "total") {
            emit_value(f, cov_integral(p, CovPart::all));
        } else if (leaf == "part") {
            CovPart part = CovPart::all;
            if (f.which == "nonneg") {
                part = CovPart::nonneg;
            } else if (f.which == "neg") {
                part = CovPart::neg;
            } else {
                throw Error(ErrorCode::parse_error, "--which must be nonneg or neg");
            }
            emit_value(f, cov_integral(p, part));
        } else if (leaf == "sf-check") {
            const auto r = s_equals_shtprime_plus_two(p, f.jmax);
            Json j{{"p", p.value()}, {"jmax", f.jmax}, {"passed", r.passed()}};
            std::string text = "pass";
            if (!r.passed()) {
                j["first_violation"] = *r.first_violation;
                text = "fail at j=" + std::to_string(*r.first_violation);
            }
            emit(f, j, text);
            return r.passed() ? exit_ok : exit_failed_check;
        } else {
            emit_value(f, cyl_measure(parse_stratum(f.stratum, p)));
        }
        return exit_ok;
    }

    int selftest(const Flags &f)
    {
        acceptance::Options opt;
        opt.quick = f.quick;
        opt.sht_fault_offset = f.fault;
        const auto results = acceptance::run(opt);
        if (f.json) {
            Json j = Json::array();
            for (const auto &r : results) {
                Json item{{"id", r.id}, {"name", r.name}, {"passed", r.passed}};
                if (!r.passed) {
                    item["detail"] = r.detail;
                }
                if (f.timings) {
                    item["seconds"] = r.seconds;
                }
                j.push_back(item);
            }
            out_ << j.dump() << '\n';
        } else {
            acceptance::print(results, out_, f.timings);
        }
        return acceptance::all_passed(results) ? exit_ok : exit_failed_check;
    }

    std::ostream &out_;
};

inline void build(CLI::App &app, Flags &f)
{
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", f.json, "Emit JSON instead of text");

    auto add_p = [&](CLI::App *c) { c->add_option("--p", f.p, "Prime characteristic")->required(); };
    auto add_d = [&](CLI::App *c) { c->add_option("--d", f.d, "Jordan block sizes, e.g. 2,2")->required(); };

    auto *s = app.add_subcommand("stringy", "Stringy integral over the torsor moduli");
    add_p(s);
    add_d(s);
    s->add_option("--variant", f.variant, "sht or sht-prime")->check(CLI::IsMember({"sht", "sht-prime"}));
    s->add_option("--domain", f.domain, "G or H")->check(CLI::IsMember({"G", "H"}));
    s->add_option("--truncate", f.truncate, "Sum strata up to J directly");

    auto *mod = app.add_subcommand("moduli", "Strata, cylinders and torsors")->require_subcommand(1);
    auto *ms = mod->add_subcommand("stratum", "Class of {ord(f) = -j} in Delta_H");
    add_p(ms);
    ms->add_option("--j", f.j, "Order index, or 'zero' for f = 0")->required();
    auto *mg = mod->add_subcommand("measure-g", "Measure of a Delta_G cylinder");
    add_p(mg);
    mg->add_option("--level", f.level, "Truncation level")->required();
    mg->add_option("--class", f.cls, "Class of the truncated image, as JSON")->required();
    auto *mt = mod->add_subcommand("torsor", "Explicit torsor presentation");
    add_p(mt);
    mt->add_option("--group", f.group, "G or H")->required()->check(CLI::IsMember({"G", "H"}));
    mt->add_option("--ord", f.ord, "ord(f), or inf for f = 0")->required();

    auto *rep = app.add_subcommand("rep", "Nilpotent representations")->require_subcommand(1);
    for (const char *name : {"jordan", "coaction", "check-axioms", "invariants", "derive"}) {
        auto *c = rep->add_subcommand(name);
        add_p(c);
        add_d(c);
        if (std::string(name) == "invariants") {
            c->add_option("--maxdeg", f.maxdeg, "Largest degree")->required();
        }
        if (std::string(name) == "derive") {
            c->add_option("--poly", f.poly, "Polynomial in x1..xn")->required();
        }
    }

    auto *quo = app.add_subcommand("quotient", "Quotient presentations and point counts")->require_subcommand(1);
    quo->add_subcommand("list", "Built-in example ids");
    auto *qv = quo->add_subcommand("verify", "Check relations and invariance");
    qv->add_option("--example", f.example)->required();
    add_p(qv);
    for (const char *name : {"count", "check"}) {
        auto *c = quo->add_subcommand(name);
        c->add_option("--example", f.example)->required();
        c->add_option("--q", f.q, "Field order")->required();
        if (std::string(name) == "check") {
            c->add_option("--value", f.value, "Motivic value as JSON")->required();
        }
    }

    auto *cov = app.add_subcommand("covars", "Change of variables for d = (2)")->require_subcommand(1);
    add_p(cov->add_subcommand("total"));
    auto *cp = cov->add_subcommand("part");
    add_p(cp);
    cp->add_option("--which", f.which, "nonneg or neg")->required()->check(CLI::IsMember({"nonneg", "neg"}));
    auto *cs = cov->add_subcommand("sf-check");
    add_p(cs);
    cs->add_option("--jmax", f.jmax)->required();
    auto *cm = cov->add_subcommand("measure");
    add_p(cm);
    cm->add_option("--stratum", f.stratum, "nonneg:i=K or neg:d=A,e=B,i=K")->required();

    auto *st = app.add_subcommand("selftest", "Run the acceptance suite");
    st->add_flag("--quick", f.quick, "Only the sub-second criteria");
    st->add_option("--inject-sht-fault", f.fault, "Add this offset to sht (negative control)");
    st->add_flag("--timings", f.timings, "Print elapsed time per criterion");
}

} // namespace detail

// Exit codes: 0 success, 1 failed check or internal error, 2 usage or input
// error.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app("Motivic integrals for alpha_p and Z/pZ torsors", "motivic");
    detail::Flags flags;
    detail::build(app, flags);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_usage;
    }
    try {
        return detail::Runner(out).dispatch(app, flags);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_usage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return exit_failed_check;
    }
}

} // namespace motivic::cli

#endif

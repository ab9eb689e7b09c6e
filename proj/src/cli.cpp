#include "galcover/cli.hpp"

#include <limits>

#include "CLI11.hpp"
#include "json.hpp"

#include "galcover/covers.hpp"
#include "galcover/report_json.hpp"

namespace galcover {

namespace {

using ordered_json = nlohmann::ordered_json;

// Usage problems detected after parsing (e.g. composite --p); exit code 2.
struct UsageError {
    std::string message;
};

void check_prime_flag(u64 value, const char* flag) {
    if (!is_prime(value))
        throw UsageError{std::string(flag) + " must be prime"};
}

ordered_json json_u128(u128 v) {
    if (v <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(v);
    return to_string_u128(v);
}

ordered_json poly_to_json(const PolyFp& f) {
    ordered_json arr = ordered_json::array();
    for (u64 c : f.coeffs())
        arr.push_back(c);
    return arr;
}

void emit(std::ostream& out, const ordered_json& j) {
    out << j.dump() << "\n";
}

std::string join_polys(const std::vector<PolyFp>& polys) {
    std::string s;
    for (const PolyFp& f : polys) {
        if (!s.empty())
            s += ", ";
        s += f.to_string();
    }
    return s;
}

struct Options {
    u64 p = 0, l = 0, s = 0, b = 0;
    u64 seed = 0;
    u64 budget = 0;
    bool json = false;
    bool s_given = false;
    bool b_given = false;
    bool budget_given = false;
};

void cmd_order(const Options& o, std::ostream& out) {
    const u64 a = ord_mod(o.l, o.p);
    if (o.json)
        emit(out, ordered_json{{"schema", "galcover/1"},
                               {"command", "order"},
                               {"l", o.l},
                               {"p", o.p},
                               {"order", a}});
    else
        out << a << "\n";
}

void cmd_factor(const Options& o, std::ostream& out) {
    const Factorization f = factor(cyclotomic_mod(o.p, o.l), o.seed);
    if (o.json) {
        ordered_json factors = ordered_json::array();
        ordered_json mults = ordered_json::array();
        for (const auto& part : f.factors) {
            factors.push_back(poly_to_json(part.factor));
            mults.push_back(part.multiplicity);
        }
        emit(out, ordered_json{{"schema", "galcover/1"},
                               {"command", "factor"},
                               {"p", o.p},
                               {"l", o.l},
                               {"factors", factors},
                               {"multiplicities", mults}});
    } else {
        for (const auto& part : f.factors) {
            out << part.factor.to_string();
            if (part.multiplicity > 1)
                out << " (multiplicity " << part.multiplicity << ")";
            out << "\n";
        }
    }
}

void cmd_genus(const Options& o, std::ostream& out) {
    const u64 g = artin_schreier_genus(o.p, o.s);
    if (o.json)
        emit(out, ordered_json{{"schema", "galcover/1"},
                               {"command", "genus"},
                               {"p", o.p},
                               {"s", o.s},
                               {"g_y", g}});
    else
        out << g << "\n";
}

void cmd_jump(const Options& o, std::ostream& out) {
    const JumpSeriesResult r = ramification_jump_series_check(o.p, o.s, 2 * o.s + 2);
    if (o.json)
        emit(out, ordered_json{{"schema", "galcover/1"},
                               {"command", "jump"},
                               {"p", o.p},
                               {"s", o.s},
                               {"jump", ordered_json{{"valuation", r.valuation},
                                                     {"leading_coeff",
                                                      r.leading_coeff.value}}}});
    else
        out << "valuation: " << r.valuation << "\n"
            << "leading coefficient: " << r.leading_coeff.value << "\n";
}

void cmd_tau(const Options& o, std::ostream& out) {
    const u64 s = o.s_given ? o.s : minimal_genus_exponent(o.p);
    const TauAction tau = tau_on_torsion({o.p, o.l, s});
    if (o.json) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : tau.matrix.to_rows())
            rows.push_back(row);
        emit(out, ordered_json{{"schema", "galcover/1"},
                               {"command", "tau"},
                               {"p", o.p},
                               {"l", o.l},
                               {"s", s},
                               {"basis", tau.basis_label},
                               {"tau_matrix", rows}});
    } else {
        out << tau.matrix.to_string();
    }
}

void cmd_decompose(const Options& o, std::ostream& out) {
    const u64 s = o.s_given ? o.s : minimal_genus_exponent(o.p);
    const TauAction tau = tau_on_torsion({o.p, o.l, s});
    const auto decomposition = primary_decomposition(tau.matrix);
    if (o.json) {
        ordered_json blocks = ordered_json::array();
        for (const auto& [f, space] : decomposition)
            blocks.push_back(ordered_json{{"factor", poly_to_json(f)},
                                          {"dimension", space.dim()}});
        emit(out, ordered_json{{"schema", "galcover/1"},
                               {"command", "decompose"},
                               {"p", o.p},
                               {"l", o.l},
                               {"s", s},
                               {"blocks", blocks}});
    } else {
        for (const auto& [f, space] : decomposition)
            out << f.to_string() << ": dimension " << space.dim() << "\n";
    }
}

void cmd_quasip(const Options& o, std::ostream& out) {
    const u64 a = ord_mod(o.l, o.p);
    const u64 b = o.b_given ? o.b : a;
    auto action = order_p_element_glb(o.l, b, o.p);
    if (!action.has_value())
        throw UnsupportedParameters(
            "no order-p action exists at rank " + std::to_string(b) +
            "; the minimal rank is " + std::to_string(a));
    SemidirectDescriptor g(o.l, b, o.p, std::move(*action));
    const u64 cap = o.budget_given ? o.budget : kDefaultGroupCap;
    const QuasiPResult r = quasi_p_check(g, cap);
    if (o.json)
        emit(out, ordered_json{{"schema", "galcover/1"},
                               {"command", "quasip"},
                               {"l", o.l},
                               {"b", b},
                               {"p", o.p},
                               {"quasi_p", r.quasi_p},
                               {"closure_size", r.closure_size},
                               {"group_order", json_u128(g.order())}});
    else
        out << "quasi-p: " << (r.quasi_p ? "yes" : "no") << "\n"
            << "closure size: " << r.closure_size << "\n"
            << "group order: " << to_string_u128(g.order()) << "\n";
}

void cmd_minimal_genus(const Options& o, std::ostream& out) {
    const u128 g = minimal_genus(o.p, o.l);
    if (o.json)
        emit(out, ordered_json{{"schema", "galcover/1"},
                               {"command", "minimal_genus"},
                               {"p", o.p},
                               {"l", o.l},
                               {"a", ord_mod(o.l, o.p)},
                               {"g_z_min", json_u128(g)}});
    else
        out << to_string_u128(g) << "\n";
}

void cmd_report(const Options& o, std::ostream& out) {
    const u64 cap = o.budget_given ? o.budget : kDefaultGroupCap;
    const CoverReport r = build_report(o.p, o.l, o.seed, cap);
    if (o.json) {
        out << emit_report_json(r);
        return;
    }
    out << "p: " << r.params.p << "\n";
    out << "l: " << r.params.l << "\n";
    out << "a (order of l mod p): " << r.a << "\n";
    std::vector<PolyFp> phi;
    for (const auto& part : r.phi_factors.factors)
        phi.push_back(part.factor);
    out << "cyclotomic factors mod l: " << join_polys(phi) << "\n";
    out << "tau matrix (" << r.tau_basis_label << "):\n";
    for (const auto& row : r.tau_matrix) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
        out << "\n";
    }
    out << "tau blocks: " << join_polys(r.tau_blocks) << "\n";
    out << "g_y: " << r.g_y << "\n";
    out << "minimal genus g_z: " << to_string_u128(r.g_z_min) << "\n";
    out << "class count bound: " << r.class_count_bound << "\n";
    switch (r.quasi_p) {
    case CoverReport::QuasiPStatus::yes:
        out << "quasi-p: yes (closure size " << r.quasi_p_closure << ")\n";
        break;
    case CoverReport::QuasiPStatus::no:
        out << "quasi-p: no (closure size " << r.quasi_p_closure << ")\n";
        break;
    case CoverReport::QuasiPStatus::skipped:
        out << "quasi-p: skipped (group exceeds cap)\n";
        break;
    }
    out << "jump: valuation " << r.jump.valuation << ", leading coefficient "
        << r.jump.leading_coeff.value << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"computations for semidirect-product Galois covers of the "
                 "affine line: cyclotomic factorizations, torsion actions, "
                 "ramification data, minimal genera"};
    app.require_subcommand(1);

    Options o;
    struct Cmd {
        CLI::App* sub;
        void (*fn)(const Options&, std::ostream&);
    };
    std::vector<Cmd> cmds;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "emit a JSON object instead of text");
    };

    {
        CLI::App* sub = app.add_subcommand("order", "multiplicative order of l modulo p");
        sub->add_option("--l", o.l, "prime l")->required();
        sub->add_option("--p", o.p, "prime p")->required();
        add_common(sub);
        cmds.push_back({sub, cmd_order});
    }
    {
        CLI::App* sub = app.add_subcommand(
            "factor", "factor the p-th cyclotomic polynomial over F_l");
        sub->add_option("--p", o.p, "prime p")->required();
        sub->add_option("--l", o.l, "prime l")->required();
        sub->add_option("--seed", o.seed, "random seed for the splitting stage");
        add_common(sub);
        cmds.push_back({sub, cmd_factor});
    }
    {
        CLI::App* sub = app.add_subcommand(
            "genus", "genus of the Artin-Schreier cover y^p - y = x^s");
        sub->add_option("--p", o.p, "prime p")->required();
        sub->add_option("--s", o.s, "exponent s (prime to p)")->required();
        add_common(sub);
        cmds.push_back({sub, cmd_genus});
    }
    {
        CLI::App* sub = app.add_subcommand(
            "jump", "ramification jump of the order-p automorphism, from the "
                    "uniformizer series");
        sub->add_option("--p", o.p, "prime p")->required();
        sub->add_option("--s", o.s, "prime exponent s != p")->required();
        add_common(sub);
        cmds.push_back({sub, cmd_jump});
    }
    {
        CLI::App* sub = app.add_subcommand(
            "tau", "matrix of the order-p action on the l-torsion of the Jacobian");
        sub->add_option("--p", o.p, "prime p")->required();
        sub->add_option("--l", o.l, "prime l != p")->required();
        sub->add_option("--s", o.s, "prime exponent s != p (default: 2, or 3 when p = 2)")
            ->each([&](const std::string&) { o.s_given = true; });
        add_common(sub);
        cmds.push_back({sub, cmd_tau});
    }
    {
        CLI::App* sub = app.add_subcommand(
            "decompose", "primary decomposition of the torsion action");
        sub->add_option("--p", o.p, "prime p")->required();
        sub->add_option("--l", o.l, "prime l != p")->required();
        sub->add_option("--s", o.s, "prime exponent s != p (default: 2, or 3 when p = 2)")
            ->each([&](const std::string&) { o.s_given = true; });
        add_common(sub);
        cmds.push_back({sub, cmd_decompose});
    }
    {
        CLI::App* sub = app.add_subcommand(
            "quasip", "check that (Z/lZ)^b x| Z/pZ is generated by its "
                      "order-p elements");
        sub->add_option("--p", o.p, "prime p")->required();
        sub->add_option("--l", o.l, "prime l != p")->required();
        sub->add_option("--b", o.b, "rank b (default: the order of l mod p)")
            ->each([&](const std::string&) { o.b_given = true; });
        sub->add_option("--budget", o.budget, "group size cap")
            ->each([&](const std::string&) { o.budget_given = true; });
        add_common(sub);
        cmds.push_back({sub, cmd_quasip});
    }
    {
        CLI::App* sub = app.add_subcommand(
            "minimal-genus", "minimal genus of a cover with group (Z/lZ)^b x| Z/pZ");
        sub->add_option("--p", o.p, "prime p")->required();
        sub->add_option("--l", o.l, "prime l != p")->required();
        add_common(sub);
        cmds.push_back({sub, cmd_minimal_genus});
    }
    {
        CLI::App* sub = app.add_subcommand(
            "report", "full invariant report at the minimal-genus parameters");
        sub->add_option("--p", o.p, "prime p")->required();
        sub->add_option("--l", o.l, "prime l != p")->required();
        sub->add_option("--seed", o.seed, "random seed for the splitting stage");
        sub->add_option("--budget", o.budget, "group size cap for the quasi-p check")
            ->each([&](const std::string&) { o.budget_given = true; });
        add_common(sub);
        cmds.push_back({sub, cmd_report});
    }

    std::vector<const char*> argv;
    argv.push_back("galcover");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        for (const Cmd& c : cmds) {
            if (!c.sub->parsed())
                continue;
            // Primality of the primes is a usage matter; everything deeper is
            // a domain error (exit 1).
            const CLI::Option* popt = c.sub->get_option_no_throw("--p");
            if (popt != nullptr && popt->count() > 0)
                check_prime_flag(o.p, "p");
            const CLI::Option* lopt = c.sub->get_option_no_throw("--l");
            if (lopt != nullptr && lopt->count() > 0)
                check_prime_flag(o.l, "l");
            c.fn(o, out);
            return 0;
        }
        err << "no command given\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << e.message << "\n";
        return 2;
    } catch (const Error& e) {
        if (o.json)
            emit(out, ordered_json{{"schema", "galcover/1"},
                                   {"error", e.name()},
                                   {"message", e.what()}});
        err << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace galcover

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

#include "symrep/character.hpp"
#include "symrep/errors.hpp"
#include "symrep/fock.hpp"
#include "symrep/io.hpp"
#include "symrep/orthogonal.hpp"
#include "symrep/schur.hpp"
#include "symrep/seminormal.hpp"
#include "symrep/verify.hpp"

namespace symrep {

namespace {

using nlohmann::json;

/// Raised when two independent computations of the same quantity disagree.
struct verification_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    int fock_cap = 12;
    double tol = 1e-9;
};

Settings read_env() {
    Settings s;
    if (const char* v = std::getenv("SYMREP_FOCK_CAP")) s.fock_cap = std::stoi(v);
    if (const char* v = std::getenv("SYMREP_TOL")) s.tol = std::stod(v);
    return s;
}

void print_matrix(const ExactMatrix& m, std::ostream& out) {
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c) out << ' ';
            out << rational_str(m(r, c));
        }
        out << '\n';
    }
}

void print_matrix(const FloatMatrix& m, std::ostream& out) {
    std::ostringstream os;
    os.precision(15);
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c) os << ' ';
            os << m(r, c);
        }
        os << '\n';
    }
    out << os.str();
}

std::string label(const Partition& la) {
    std::string s;
    for (std::size_t i = 0; i < la.parts().size(); ++i) {
        if (i) s += '+';
        s += std::to_string(la.parts()[i]);
    }
    return s.empty() ? "0" : s;
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError(what + " must be an integer, got '" + text + "'");
    }
}

SkewShape make_shape(const std::string& lambda, const std::string& mu) {
    return SkewShape(Partition::parse(lambda),
                     mu.empty() ? Partition{} : Partition::parse(mu));
}

void cmd_partitions(int n, const std::string& format, std::ostream& out) {
    const auto ps = partitions_of(n);
    if (format == "json") {
        json j = json::array();
        for (const Partition& la : ps) j.push_back(to_json(la));
        out << j.dump() << '\n';
    } else {
        for (const Partition& la : ps) out << la.to_string() << '\n';
    }
}

void cmd_tableaux(const SkewShape& shape, const std::string& format,
                  std::ostream& out) {
    const auto ts = standard_tableaux(shape);
    if (format == "json") {
        json j = json::array();
        for (const auto& t : ts) j.push_back(to_json(t));
        out << j.dump() << '\n';
    } else {
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (i) out << '\n';
            out << ts[i].to_string();
        }
        out << "count: " << ts.size() << '\n';
    }
}

void cmd_dim(const Partition& la, const std::string& format, std::ostream& out) {
    const Integer d = hook_dimension(la);
    if (format == "json")
        out << json{{"lambda", to_json(la)}, {"dim", d.str()}}.dump() << '\n';
    else
        out << d.str() << '\n';
}

void cmd_chartable(int n, const std::string& format, std::ostream& out) {
    const CharacterTable t = character_table(n);
    if (format == "json") {
        out << to_json(t).dump() << '\n';
    } else if (format == "csv") {
        out << character_table_csv(t);
    } else {
        out << "classes:";
        for (const Partition& rho : t.col_labels) out << ' ' << label(rho);
        out << "\nsizes:";
        for (const Integer& s : t.class_sizes) out << ' ' << s.str();
        out << '\n';
        for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
            out << label(t.row_labels[i]) << ':';
            for (const Integer& v : t.entries[i]) out << ' ' << v.str();
            out << '\n';
        }
    }
}

void cmd_chi(const SkewShape& shape, const Partition& rho,
             const std::string& method, const std::string& format,
             const Settings& env, std::ostream& out) {
    if (rho.size() != shape.size())
        throw domain_error("cycle type size does not match shape size");

    std::vector<std::pair<std::string, Integer>> values;
    const auto compute = [&](const std::string& m) {
        if (m == "mn") {
            values.emplace_back("mn", mn_character(shape, rho));
        } else if (m == "fock") {
            if (!shape.is_straight())
                throw domain_error("fock method requires a straight shape");
            values.emplace_back("fock", fock_character(shape.outer(), rho));
        } else if (m == "trace") {
            const Permutation w = class_representative(rho);
            if (shape.is_straight()) {
                const Rational tr =
                    rep_matrix(seminormal_rep(shape.outer()), w).trace();
                if (denominator(tr) != 1)
                    throw verification_failure("seminormal trace is not an integer");
                values.emplace_back("trace", numerator(tr));
            } else {
                const double tr = rep_matrix(orthogonal_rep(shape), w).trace();
                const double rounded = std::round(tr);
                if (std::fabs(tr - rounded) > env.tol)
                    throw verification_failure(
                        "orthogonal trace is not an integer within tolerance");
                values.emplace_back("trace", Integer(static_cast<long long>(rounded)));
            }
        } else {
            throw CLI::ValidationError("unknown method '" + m + "'");
        }
    };

    if (method == "all") {
        compute("mn");
        compute("trace");
        if (shape.is_straight()) compute("fock");
    } else {
        compute(method);
    }

    if (format == "json") {
        json j;
        for (const auto& [m, v] : values) j[m] = v.str();
        out << j.dump() << '\n';
    } else if (values.size() == 1) {
        out << values.begin()->second.str() << '\n';
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out << ' ';
            out << values[i].first << '=' << values[i].second.str();
        }
        out << '\n';
    }

    const Integer& first = values.begin()->second;
    for (const auto& [m, v] : values)
        if (v != first)
            throw verification_failure("character methods disagree");
}

void cmd_rep(const SkewShape& shape, const std::string& form,
             const std::string& perm, const std::string& format,
             std::ostream& out) {
    const bool seminormal = (form == "seminormal");
    if (seminormal && !shape.is_straight())
        throw domain_error("seminormal form requires a straight shape");

    const auto emit = [&](const std::string& name, const json& jm, auto printer) {
        if (format == "json") {
            out << json{{"name", name}, {"matrix", jm}}.dump() << '\n';
        } else {
            out << name << ":\n";
            printer();
        }
    };

    if (seminormal) {
        const auto rep = seminormal_rep(shape.outer());
        if (!perm.empty()) {
            const auto m = rep_matrix(rep, Permutation::parse(perm, rep.n()));
            emit(perm, to_json(m), [&] { print_matrix(m, out); });
        } else {
            for (std::size_t k = 0; k < rep.gens.size(); ++k)
                emit("s_" + std::to_string(k + 1), to_json(rep.gens[k]),
                     [&] { print_matrix(rep.gens[k], out); });
        }
    } else {
        const auto rep = orthogonal_rep(shape);
        if (!perm.empty()) {
            const auto m = rep_matrix(rep, Permutation::parse(perm, rep.n()));
            emit(perm, to_json(m), [&] { print_matrix(m, out); });
        } else {
            for (std::size_t k = 0; k < rep.gens.size(); ++k)
                emit("s_" + std::to_string(k + 1), to_json(rep.gens[k]),
                     [&] { print_matrix(rep.gens[k], out); });
        }
    }
}

void cmd_jm(const Partition& la, int k, const std::string& format,
            std::ostream& out) {
    const auto m = jm_matrix(seminormal_rep(la), k);
    if (format == "json")
        out << to_json(m).dump() << '\n';
    else
        print_matrix(m, out);
}

void cmd_schur(const Partition& la, const std::string& format, std::ostream& out) {
    const auto p = schur_poly(la);
    if (format == "json")
        out << to_json(p).dump() << '\n';
    else
        out << p.to_string() << '\n';
}

void cmd_frobenius(const Partition& rho, const std::string& format,
                   std::ostream& out) {
    const auto terms = frobenius_expand(rho);
    if (format == "json") {
        json j = json::array();
        for (const auto& [la, chi] : terms)
            j.push_back(json{{"lambda", to_json(la)}, {"coeff", chi.str()}});
        out << j.dump() << '\n';
    } else {
        for (const auto& [la, chi] : terms)
            out << la.to_string() << ": " << chi.str() << '\n';
    }
}

void cmd_idempotent(int n, const Partition& la, const std::string& format,
                    std::ostream& out) {
    const auto e = central_idempotent(n, la);
    if (format == "json") {
        json j = json::array();
        for (const auto& [g, c] : e.coeffs)
            j.push_back(json{{"perm", g.to_string()}, {"coeff", rational_str(c)}});
        out << j.dump() << '\n';
    } else {
        for (const auto& [g, c] : e.coeffs)
            out << rational_str(c) << " [" << g.to_string() << "]\n";
    }
}

void cmd_fock_apply(int k, const std::vector<Partition>& lambdas,
                    const Settings& env, const std::string& format,
                    std::ostream& out) {
    json j = json::array();
    for (const Partition& la : lambdas) {
        const auto result = lambda_op(k, FockVector::basis(la, env.fock_cap));
        if (format == "json") {
            j.push_back(json{{"lambda", to_json(la)}, {"result", to_json(result)}});
        } else {
            out << la.to_string() << " ->";
            if (result.is_zero()) out << " 0";
            for (const auto& [mu, c] : result.terms)
                out << ' ' << rational_str(c) << "*[" << mu.to_string() << "]";
            out << '\n';
        }
    }
    if (format == "json") out << j.dump() << '\n';
}

void cmd_verify(int n, const std::string& suite, const Settings& env,
                std::ostream& out, std::ostream& err) {
    VerifyResult res;
    const bool all = (suite == "all");
    if (all || suite == "coxeter") res.merge(verify_coxeter(n, env.tol));
    if (all || suite == "orthogonality") res.merge(verify_orthogonality(n));
    if (all || suite == "characters") res.merge(verify_characters(n));
    if (all || suite == "fock") res.merge(verify_fock(n, 3, env.fock_cap));
    if (all || suite == "boson") res.merge(verify_boson(n, 3, env.fock_cap));
    if (!res.ok()) {
        for (const auto& f : res.failures) err << f << '\n';
        throw verification_failure(std::to_string(res.failures.size()) +
                                   " verification failure(s)");
    }
    out << "ok\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    const Settings env = read_env();

    CLI::App app{"Exact representation theory of symmetric groups"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string lambda, mu, rho, perm, method = "mn", form, suite = "all";
    std::string k_text;
    std::vector<std::string> lambda_list;
    int n = 5;

    auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember(choices));
    };

    auto* p_partitions = app.add_subcommand("partitions", "List partitions of N");
    p_partitions->add_option("N", n)->required();
    add_format(p_partitions, {"text", "json"});
    p_partitions->callback([&] { cmd_partitions(n, format, out); });

    auto* p_tableaux =
        app.add_subcommand("tableaux", "List standard tableaux of a shape");
    p_tableaux->add_option("LAMBDA", lambda)->required();
    p_tableaux->add_option("--skew", mu, "Inner shape");
    add_format(p_tableaux, {"text", "json"});
    p_tableaux->callback(
        [&] { cmd_tableaux(make_shape(lambda, mu), format, out); });

    auto* p_dim = app.add_subcommand("dim", "Dimension by the hook formula");
    p_dim->add_option("LAMBDA", lambda)->required();
    add_format(p_dim, {"text", "json"});
    p_dim->callback([&] { cmd_dim(Partition::parse(lambda), format, out); });

    auto* p_table = app.add_subcommand("chartable", "Character table of S_N");
    p_table->add_option("N", n)->required();
    add_format(p_table, {"text", "csv", "json"});
    p_table->callback([&] { cmd_chartable(n, format, out); });

    auto* p_chi = app.add_subcommand("chi", "Character value chi^LAMBDA(RHO)");
    p_chi->add_option("LAMBDA", lambda)->required();
    p_chi->add_option("RHO", rho)->required();
    p_chi->add_option("--skew", mu, "Inner shape");
    p_chi->add_option("--method", method)
        ->check(CLI::IsMember({"mn", "trace", "fock", "all"}));
    add_format(p_chi, {"text", "json"});
    p_chi->callback([&] {
        cmd_chi(make_shape(lambda, mu), Partition::parse(rho), method, format,
                env, out);
    });

    auto* p_rep = app.add_subcommand("rep", "Generator or permutation matrices");
    p_rep->add_option("LAMBDA", lambda)->required();
    p_rep->add_option("--skew", mu, "Inner shape");
    p_rep->add_option("--form", form)
        ->required()
        ->check(CLI::IsMember({"seminormal", "orthogonal"}));
    p_rep->add_option("--perm", perm, "Permutation, one-line or cycles");
    add_format(p_rep, {"text", "json"});
    p_rep->callback(
        [&] { cmd_rep(make_shape(lambda, mu), form, perm, format, out); });

    auto* p_jm = app.add_subcommand("jm", "Jucys-Murphy matrix L_K");
    p_jm->add_option("LAMBDA", lambda)->required();
    p_jm->add_option("K", k_text)->required();
    add_format(p_jm, {"text", "json"});
    p_jm->callback([&] {
        cmd_jm(Partition::parse(lambda), parse_int(k_text, "K"), format, out);
    });

    auto* p_schur = app.add_subcommand("schur", "Schur polynomial S_LAMBDA");
    p_schur->add_option("LAMBDA", lambda)->required();
    add_format(p_schur, {"text", "json"});
    p_schur->callback([&] { cmd_schur(Partition::parse(lambda), format, out); });

    auto* p_frob =
        app.add_subcommand("frobenius", "Schur expansion of the power sum P_RHO");
    p_frob->add_option("RHO", rho)->required();
    add_format(p_frob, {"text", "json"});
    p_frob->callback([&] { cmd_frobenius(Partition::parse(rho), format, out); });

    auto* p_idem =
        app.add_subcommand("idempotent", "Central idempotent e_LAMBDA in S_N");
    p_idem->add_option("N", n)->required();
    p_idem->add_option("LAMBDA", lambda)->required();
    add_format(p_idem, {"text", "json"});
    p_idem->callback(
        [&] { cmd_idempotent(n, Partition::parse(lambda), format, out); });

    auto* p_fock =
        app.add_subcommand("fock-apply", "Apply the hook operator Lambda_K");
    p_fock->add_option("K", k_text)->required();
    p_fock->add_option("LAMBDA", lambda_list, "Basis partitions")->required();
    add_format(p_fock, {"text", "json"});
    p_fock->callback([&] {
        std::vector<Partition> ps;
        for (const auto& s : lambda_list) ps.push_back(Partition::parse(s));
        cmd_fock_apply(parse_int(k_text, "K"), ps, env, format, out);
    });

    auto* p_verify = app.add_subcommand("verify", "Run cross-validation suites");
    p_verify->add_option("--n", n, "Largest symmetric group degree");
    p_verify->add_option("--suite", suite)
        ->check(CLI::IsMember(
            {"coxeter", "orthogonality", "characters", "fock", "boson", "all"}));
    p_verify->callback([&] { cmd_verify(n, suite, env, out, err); });

    std::vector<const char*> argv;
    argv.push_back("symrep");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    } catch (const truncation_error& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const verification_failure& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace symrep

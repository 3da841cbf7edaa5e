// maxker: command-line front end for linearized-polynomial computations over
// small finite fields.  See README.md for the grammar and examples.
//
// Exit codes: 0 success, 1 domain error (machine-readable JSON with --format
// json), 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxker/maxker.hpp"

using json = nlohmann::ordered_json;
using namespace maxker;

namespace {

std::string g_format = "text";

void render_text(const json& j, const std::string& indent = "") {
    for (auto& [key, value] : j.items()) {
        if (value.is_object()) {
            std::cout << indent << key << ":\n";
            render_text(value, indent + "  ");
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            std::cout << indent << key << ":\n";
            for (auto& item : value) {
                std::cout << indent << "  -\n";
                render_text(item, indent + "    ");
            }
        } else {
            std::cout << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << "\n";
        }
    }
}

void emit(const json& j) {
    if (g_format == "json")
        std::cout << j.dump(2) << "\n";
    else
        render_text(j);
}

std::uint64_t env_budget() {
    if (const char* v = std::getenv("MAXKER_BUDGET")) {
        char* end = nullptr;
        std::uint64_t b = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && b > 0) return b;
        fail(errc::bad_spec, "MAXKER_BUDGET is not a positive integer");
    }
    return kDefaultBudget;
}

std::vector<Elem> parse_elem_list(const Field& F, const std::string& csv) {
    std::vector<Elem> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t pos = csv.find(',', start);
        std::string tok = csv.substr(start, pos == std::string::npos ? pos : pos - start);
        if (!tok.empty()) out.push_back(F.elem(std::strtoull(tok.c_str(), nullptr, 10)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    require(!out.empty(), errc::bad_spec, "empty element list");
    return out;
}

std::string fp_poly_string(const Field& F) {
    const auto& m = F.modulus();
    std::string out;
    for (std::size_t i = m.size(); i-- > 0;) {
        if (!m[i]) continue;
        if (!out.empty()) out += " + ";
        std::string term;
        if (i == 0 || m[i] != 1) term += std::to_string(m[i]);
        if (i >= 1) {
            if (!term.empty()) term += "*";
            term += "x";
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += term;
    }
    return out.empty() ? "0" : out;
}

Method parse_method(const std::string& name) {
    if (name == "matrix") return Method::Matrix;
    if (name == "e0") return Method::E0;
    if (name == "recursion") return Method::Recursion;
    if (name == "oracle") return Method::Oracle;
    fail(errc::bad_spec, "unknown method '" + name + "'");
}

json table_report_json(const TableReport& rep) {
    json out;
    out["table"] = rep.table;
    out["s"] = rep.s;
    out["all_equal"] = rep.all_equal;
    json per_k = json::array();
    for (auto& kr : rep.per_k) {
        json jk;
        jk["k"] = kr.k;
        jk["enumerated"] = kr.enumerated;
        jk["union_size"] = kr.union_size;
        jk["equal"] = kr.equal;
        json rows = json::array();
        for (auto& r : kr.rows) rows.push_back({{"row", row_name(r.id)}, {"count", r.count}});
        jk["rows"] = rows;
        json overlaps = json::array();
        for (auto& o : kr.overlaps)
            overlaps.push_back({{"row_i", row_name(kr.rows[o[0]].id)},
                                {"row_j", row_name(kr.rows[o[1]].id)},
                                {"size", o[2]}});
        jk["overlaps"] = overlaps;
        per_k.push_back(jk);
    }
    out["per_k"] = per_k;
    return out;
}

// factor a prime power; used by `verify-table --q`
std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q) {
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        unsigned e = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        require(r == 1, errc::bad_spec, "q must be a prime power");
        return {p, e};
    }
    return {q, 1};  // q itself prime
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linearized polynomials over finite fields: kernels, maximum-kernel "
                 "criteria, condition tables, Gabidulin codes"};
    app.require_subcommand(1);

    std::string field_spec, poly_spec, method_name = "matrix", elems_csv, coeffs_csv;
    std::uint64_t x_code = 0, a0_code = 0, an3_code = 0;
    std::uint64_t budget = 0, order_cap = 1000000;
    long s_opt = 1, t_opt = 1;
    unsigned k_opt = 1, m_opt = 1, table_opt = 1;
    std::uint64_t q_opt = 2;
    int only_k = -1;
    bool with_splitting = false, with_witnesses = false;
    std::string enum_method = "oracle";

    auto add_common = [&](CLI::App* sub, bool needs_field = true) {
        sub->add_option("--format", g_format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        if (needs_field)
            sub->add_option("--field", field_spec, "field spec p^e^n[/modulus-int]")->required();
        return sub;
    };

    auto* c_info = add_common(app.add_subcommand("field-info", "describe a field"));

    auto* c_eval = add_common(app.add_subcommand("eval", "evaluate a polynomial"));
    c_eval->add_option("--poly", poly_spec, "polynomial spec s=<int>;a=[...]")->required();
    c_eval->add_option("--x", x_code, "element code")->required();

    auto* c_kernel = add_common(app.add_subcommand("kernel", "kernel basis and dimension"));
    c_kernel->add_option("--poly", poly_spec, "polynomial spec s=<int>;a=[...]")->required();

    auto* c_max = add_common(app.add_subcommand("check-max", "maximum-kernel test"));
    c_max->add_option("--poly", poly_spec, "polynomial spec s=<int>;a=[...]")->required();
    c_max->add_option("--method", method_name, "matrix|e0|recursion|oracle");
    c_max->add_flag("--with-splitting", with_splitting, "also compute the splitting degree");
    c_max->add_option("--order-cap", order_cap, "iteration cap for matrix orders");

    auto* c_split = add_common(app.add_subcommand("splitting-field", "splitting field degree"));
    c_split->add_option("--poly", poly_spec, "polynomial spec s=<int>;a=[...]")->required();
    c_split->add_option("--order-cap", order_cap);

    auto* c_adj = add_common(app.add_subcommand("adjoint", "adjoint polynomial"));
    c_adj->add_option("--poly", poly_spec, "polynomial spec s=<int>;a=[...]")->required();

    auto* c_ann = add_common(app.add_subcommand("annihilator", "annihilator of a subspace"));
    c_ann->add_option("--elems", elems_csv, "comma-separated basis element codes")->required();

    auto* c_enum = add_common(app.add_subcommand("enumerate", "all maximum-kernel polynomials"));
    c_enum->add_option("--s", s_opt)->required();
    c_enum->add_option("--k", k_opt)->required();
    c_enum->add_option("--method", enum_method, "oracle|seeded");
    c_enum->add_option("--budget", budget, "tuple budget (default MAXKER_BUDGET or 2^24)");
    c_enum->add_flag("--witnesses", with_witnesses, "include the full witness list");

    auto* c_table = add_common(app.add_subcommand("verify-table", "reproduce a condition table"),
                               false);
    c_table->add_option("--table", table_opt, "1 (n=4), 2 (n=5), 3 (n=6)")->required();
    c_table->add_option("--q", q_opt, "field size q (prime power)")->required();
    c_table->add_option("--s", s_opt, "grid step (table 2 only: 1 or 2)");
    c_table->add_option("--k", only_k, "restrict to one sigma-degree");
    c_table->add_option("--budget", budget);

    auto* c_derive = add_common(app.add_subcommand("derive-n2", "sigma-degree n-2 system"));
    c_derive->add_option("--s", s_opt);
    c_derive->add_option("--a0", a0_code, "element code of a_0")->required();
    c_derive->add_option("--an3", an3_code, "element code of a_{n-3}")->required();

    auto* c_mrd = add_common(app.add_subcommand("mrd-verify", "verify a Gabidulin code"));
    c_mrd->add_option("--k", k_opt)->required();
    c_mrd->add_option("--s", s_opt)->required();
    c_mrd->add_option("--budget", budget);

    auto* c_transfer = add_common(app.add_subcommand("transfer-check", "compare q^s and q^t verdicts"));
    c_transfer->add_option("--m", m_opt, "coefficients lie in F_{q^m}")->required();
    c_transfer->add_option("--s", s_opt)->required();
    c_transfer->add_option("--t", t_opt)->required();
    c_transfer->add_option("--coeffs", coeffs_csv, "comma-separated codes of a_0..a_{k-1}")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (budget == 0) budget = env_budget();

        if (*c_info) {
            Field F = make_field(field_spec);
            emit({{"spec", field_spec_string(F)},
                  {"p", F.p()},
                  {"e", F.e()},
                  {"n", F.n()},
                  {"q", F.q()},
                  {"order", F.order()},
                  {"modulus", F.modulus_code()},
                  {"modulus_poly", fp_poly_string(F)},
                  {"gamma", F.gamma().v}});
        } else if (*c_eval) {
            Field F = make_field(field_spec);
            LinPoly f = parse_poly_spec(poly_spec, F);
            emit({{"value", evaluate(f, F.elem(x_code)).v}});
        } else if (*c_kernel) {
            Field F = make_field(field_spec);
            LinPoly f = parse_poly_spec(poly_spec, F);
            auto basis = kernel_basis(f);
            json b = json::array();
            for (auto& u : basis.elems()) b.push_back(u.v);
            emit({{"kernel_dim", basis.dim()}, {"rank", F.n() - basis.dim()}, {"basis", b}});
        } else if (*c_max) {
            Field F = make_field(field_spec);
            LinPoly f = parse_poly_spec(poly_spec, F);
            Method method = parse_method(method_name);
            json out;
            out["method"] = method_name;
            out["max_kernel"] = is_maximum_kernel(f, method);
            LinPoly g = monic_normalize(f);
            if (g.sigma_degree() >= 1 && !F.is_zero(g.coeff_s(0))) {
                FMat B = semilinear_product(companion(g));
                out["B_is_identity"] = B.is_identity();
            } else {
                out["B_is_identity"] = nullptr;
            }
            out["kernel_dim"] = kernel_dim(f);
            if (with_splitting)
                out["splitting_degree"] = splitting_field_degree(f, order_cap);
            else
                out["splitting_degree"] = nullptr;
            emit(out);
        } else if (*c_split) {
            Field F = make_field(field_spec);
            LinPoly f = parse_poly_spec(poly_spec, F);
            unsigned m = splitting_field_degree(f, order_cap);
            json out;
            out["splitting_degree"] = m;
            out["splitting_field"] = std::to_string(F.q()) + "^" + std::to_string(F.n() * m);
            if (f.s() != 1 && F.n() > 1)
                out["note"] = "s != 1: the degree marks where the kernel attains "
                              "dimension k (q^k roots); the full root set of f may "
                              "need a larger field";
            emit(out);
        } else if (*c_adj) {
            Field F = make_field(field_spec);
            LinPoly f = parse_poly_spec(poly_spec, F);
            emit({{"poly", poly_spec_string(adjoint(f))}});
        } else if (*c_ann) {
            Field F = make_field(field_spec);
            SubspaceBasis U(F, parse_elem_list(F, elems_csv));
            LinPoly f = annihilator(U);
            emit({{"poly", poly_spec_string(f)}, {"kernel_dim", kernel_dim(f)}});
        } else if (*c_enum) {
            Field F = make_field(field_spec);
            EnumMethod em = enum_method == "seeded" ? EnumMethod::Seeded : EnumMethod::Oracle;
            auto polys = enumerate_max_kernel(F, s_opt, k_opt, em, budget);
            json out;
            out["field"] = field_spec_string(F);
            out["s"] = s_opt;
            out["k"] = k_opt;
            out["count"] = polys.size();
            if (with_witnesses || g_format == "json") {
                json w = json::array();
                for (auto& f : polys) w.push_back(poly_spec_string(f));
                out["witnesses"] = w;
            }
            emit(out);
        } else if (*c_table) {
            auto [p, e] = split_prime_power(q_opt);
            unsigned n = table_opt + 3;  // tables 1, 2, 3 describe n = 4, 5, 6
            Field F(p, e, n);
            auto rep = verify_table(F, table_opt, static_cast<unsigned>(s_opt), budget, only_k);
            emit(table_report_json(rep));
        } else if (*c_derive) {
            Field F = make_field(field_spec);
            auto [f, ok] = derive_degree_n_minus_2({&F, s_opt, F.elem(a0_code), F.elem(an3_code)});
            emit({{"poly", poly_spec_string(f)}, {"max_kernel", ok}});
        } else if (*c_mrd) {
            Field F = make_field(field_spec);
            auto rep = verify_mrd(gabidulin_code(F, k_opt, s_opt), budget);
            json worst = json::array();
            for (auto c : rep.worst_coeffs) worst.push_back(c);
            emit({{"min_rank", rep.min_rank},
                  {"max_kernel_dim", rep.max_kernel_dim},
                  {"is_mrd", rep.is_mrd},
                  {"worst_coeffs", worst}});
        } else if (*c_transfer) {
            Field F = make_field(field_spec);
            auto r = transfer_check(F, m_opt, s_opt, t_opt, parse_elem_list(F, coeffs_csv));
            emit({{"agree", r.agree}, {"f_max", r.f_max}, {"g_max", r.g_max}});
        }
    } catch (const Error& e) {
        if (g_format == "json")
            std::cout << json{{"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
        else
            std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        if (g_format == "json")
            std::cout << json{{"error", "internal_error"}, {"message", e.what()}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include "hopfint/cli.hpp"

#include "hopfint/io.hpp"
#include "hopfint/taft.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace hopfint::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

CycScalar parse_beta_token(int n, const std::string& token) {
    if (token == "w" || token == "omega") return omega(n);
    if (token.rfind("w^", 0) == 0) return omega(n).pow(std::stoll(token.substr(2)));
    return CycScalar::from_rational(n, parse_rational(token));
}

std::uint64_t seed_from_env() {
    if (const char* env = std::getenv("HOPF_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw std::invalid_argument("HOPF_SEED must be an unsigned integer");
        }
    }
    return 12345;
}

ordered_json vec_json(const Vec& v) {
    ordered_json out = ordered_json::array();
    for (const auto& c : v) out.push_back(scalar_to_string(c));
    return out;
}

ordered_json subspace_basis_json(const Subspace& s) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < s.dim(); ++i) out.push_back(vec_json(s.basis_vector(i)));
    return out;
}

ordered_json checked(bool value, bool expected) {
    ordered_json j;
    j["value"] = value;
    j["expected"] = expected;
    j["pass"] = value == expected;
    return j;
}

bool collect_pass(const ordered_json& j) {
    if (j.is_object()) {
        bool ok = true;
        for (const auto& [key, val] : j.items()) {
            if (key == "pass" && val.is_boolean())
                ok = ok && val.get<bool>();
            else
                ok = ok && collect_pass(val);
        }
        return ok;
    }
    if (j.is_array()) {
        bool ok = true;
        for (const auto& val : j) ok = ok && collect_pass(val);
        return ok;
    }
    return true;
}

std::string frobenius_summary(const FinDimAlgebra& alg, std::uint64_t seed) {
    const int trials = 64;
    auto cert = frobenius_search(alg, trials, seed);
    if (cert) return "certified";
    return "no certificate after " + std::to_string(trials) + " trials";
}

ordered_json cointegral_cells_json(const CointegralTableReport& table, const std::string& family,
                                   const std::string& parameter) {
    ordered_json cells = ordered_json::array();
    for (const auto& cell : table.cells) {
        if (cell.family != family || cell.parameter != parameter) continue;
        ordered_json c;
        c["g_exponent"] = cell.g_exponent;
        c["dim"] = cell.dim;
        c["dim_pass"] = cell.dim_matches_closed_form;
        c["values_pass"] = cell.values_match_closed_form;
        c["pass"] = cell.dim_matches_closed_form && cell.values_match_closed_form;
        if (cell.dim == 1) {
            c["faithful"] = cell.faithful;
            ordered_json values;
            for (const auto& [label, value] : cell.phi_values) values[label] = value;
            c["phi_values"] = std::move(values);
        }
        cells.push_back(std::move(c));
    }
    return cells;
}

ordered_json integrals_section(const CoidealSubalgebra& coideal, const Vec& named_integral,
                               bool expect_l_equals_r) {
    const HopfAlgebra& h = *coideal.ambient;
    const Functional eps = counit_restricted(coideal);
    const Subspace l = left_integrals(coideal, eps);
    const Subspace r = right_integrals(coideal, eps);
    const Subspace named = Subspace::from_spanning({named_integral}, h.dim(), h.conductor());
    ordered_json j;
    j["dim_L"] = l.dim();
    j["dim_R"] = r.dim();
    j["basis_L"] = subspace_basis_json(l);
    j["L_matches_closed_form"] = l == named;
    j["R_equals_L"] = l == r;
    bool pass = l.dim() == 1 && r.dim() == 1 && l == named;
    if (expect_l_equals_r) pass = pass && l == r;
    j["pass"] = pass;
    return j;
}

ordered_json z_checks_v_p_beta(const TaftAlgebra& t, const CycScalar& beta,
                               const CoidealSubalgebra& coideal) {
    const HopfAlgebra& h = *t.hopf;
    const Vec p = p_beta(t, beta);
    const Vec y = t.monomial(t.n - 1, 0);  // g^{-1}
    const Vec z = z_element(h, p, y);
    const Vec expected = u_power(t, beta, t.n - 1);
    bool central = true;
    for (int i = 0; i < coideal.dim(); ++i) {
        const Vec b = coideal.space.basis_vector(i);
        if (h.multiply(z, b) != h.multiply(b, z)) central = false;
    }
    auto inverse = is_invertible_in(coideal, z);
    ordered_json j;
    j["y"] = "g^" + std::to_string(t.n - 1);
    j["z_matches_closed_form"] = z == expected;
    j["central"] = central;
    j["invertible"] = inverse.has_value();
    const bool inverse_ok = inverse && *inverse == u_power(t, beta, 1);
    j["inverse_matches_closed_form"] = inverse_ok;
    j["pass"] = (z == expected) && central && inverse_ok;
    return j;
}

ordered_json z_checks_h_d(const TaftAlgebra& t, int d, const CoidealSubalgebra& coideal) {
    const HopfAlgebra& h = *t.hopf;
    const Vec p = p_d(t, d);
    bool all_ok = true;
    ordered_json entries = ordered_json::array();
    for (int m = 0; m < t.n / d; ++m) {
        const Vec y = t.monomial((d * m) % t.n, 0);
        const Vec z = z_element(h, p, y);
        const bool match = z == y;
        auto inverse = is_invertible_in(coideal, z);
        const bool inverse_ok = inverse && *inverse == t.monomial((t.n - d * m) % t.n, 0);
        bool central = true;
        for (int i = 0; i < coideal.dim(); ++i) {
            const Vec b = coideal.space.basis_vector(i);
            if (h.multiply(z, b) != h.multiply(b, z)) central = false;
        }
        ordered_json e;
        e["y"] = "g^" + std::to_string(d * m);
        e["z_matches_closed_form"] = match;
        e["central"] = central;
        e["invertible"] = inverse.has_value();
        e["inverse_matches_closed_form"] = inverse_ok;
        const bool ok = match && central && inverse_ok;
        e["pass"] = ok;
        all_ok = all_ok && ok;
        entries.push_back(std::move(e));
    }
    ordered_json j;
    j["entries"] = std::move(entries);
    j["pass"] = all_ok;
    return j;
}

ordered_json family_v_p_beta(const TaftAlgebra& t, const CycScalar& beta,
                             const CointegralTableReport& table, std::uint64_t seed) {
    const HopfAlgebra& h = *t.hopf;
    const CoidealSubalgebra coideal = coideal_v_p_beta(t, beta);
    const Vec p = p_beta(t, beta);
    ordered_json fam;
    fam["family"] = "V_P_beta";
    fam["parameter"] = scalar_to_string(embed(beta, t.n));
    fam["dim"] = coideal.dim();
    fam["integrals"] = integrals_section(coideal, p, /*expect_l_equals_r=*/true);
    fam["nondegenerate"] = checked(is_nondegenerate(t.hopf, p), true);
    fam["projection_class"] = [&] {
        ordered_json j;
        j["value"] = to_string(classify_group_like_projection(h, p));
        j["expected"] = "right";
        j["pass"] = j["value"] == j["expected"];
        return j;
    }();
    fam["semisimple"] = checked(is_semisimple(induced_algebra(coideal)), true);
    fam["unimodular"] = is_unimodular(coideal);
    fam["two_sided_identity"] = [&] {
        const GroupLike g_inv(h, t.monomial(t.n - 1, 0));
        const Subspace sols = g_cointegrals(h, coideal.space, g_inv);
        ordered_json j;
        if (sols.dim() != 1) {
            j["pass"] = false;
            return j;
        }
        const Cointegral phi = normalize_on(h, coideal.space, g_inv, sols.basis_vector(0), p);
        j["g"] = "g^" + std::to_string(t.n - 1);
        j["pass"] = check_two_sided_identity(h, p, g_inv, phi);
        return j;
    }();
    fam["z_elements"] = z_checks_v_p_beta(t, beta, coideal);
    fam["frobenius"] = frobenius_summary(induced_algebra(coideal), seed);
    fam["cointegrals"] =
        cointegral_cells_json(table, "V_P_beta", fam["parameter"].get<std::string>());
    fam["pass"] = collect_pass(fam);
    return fam;
}

ordered_json family_h_d(const TaftAlgebra& t, int d, const CointegralTableReport& table,
                        std::uint64_t seed) {
    const HopfAlgebra& h = *t.hopf;
    const CoidealSubalgebra coideal = hopf_sub_h_d(t, d);
    const Vec p = p_d(t, d);
    ordered_json fam;
    fam["family"] = "H_d";
    fam["parameter"] = std::to_string(d);
    fam["dim"] = coideal.dim();
    fam["integrals"] = integrals_section(coideal, p, /*expect_l_equals_r=*/true);
    fam["nondegenerate"] = checked(is_nondegenerate(t.hopf, p), true);
    fam["projection_class"] = [&] {
        ordered_json j;
        j["value"] = to_string(classify_group_like_projection(h, p));
        j["expected"] = "two_sided";
        j["pass"] = j["value"] == j["expected"];
        return j;
    }();
    fam["semisimple"] = checked(is_semisimple(induced_algebra(coideal)), true);
    fam["unimodular"] = is_unimodular(coideal);
    fam["two_sided_identity"] = [&] {
        const GroupLike one(h, h.unit());
        const Subspace sols = g_cointegrals(h, coideal.space, one);
        ordered_json j;
        if (sols.dim() != 1) {
            j["pass"] = false;
            return j;
        }
        const Cointegral phi = normalize_on(h, coideal.space, one, sols.basis_vector(0), p);
        j["g"] = "g^0";
        bool ok = check_two_sided_identity(h, p, one, phi);
        // For the two-sided case additionally Lambda = S(Lambda) g.
        ok = ok && h.antipode(p) == p;
        j["lambda_equals_S_lambda_g"] = h.antipode(p) == p;
        j["pass"] = ok;
        return j;
    }();
    fam["z_elements"] = z_checks_h_d(t, d, coideal);
    fam["frobenius"] = frobenius_summary(induced_algebra(coideal), seed);
    fam["cointegrals"] = cointegral_cells_json(table, "H_d", fam["parameter"].get<std::string>());
    fam["pass"] = collect_pass(fam);
    return fam;
}

ordered_json family_n_dx(const TaftAlgebra& t, int d, const CointegralTableReport& table,
                         std::uint64_t seed) {
    const CoidealSubalgebra coideal = coideal_n_dx(t, d);
    const Vec lambda = lambda_dx(t, d);
    ordered_json fam;
    fam["family"] = "N_dx";
    fam["parameter"] = std::to_string(d);
    fam["dim"] = coideal.dim();
    fam["integrals"] = integrals_section(coideal, lambda, /*expect_l_equals_r=*/false);
    fam["nondegenerate"] = checked(is_nondegenerate(t.hopf, lambda), true);
    fam["projection_class"] = "not_a_projection";  // Lambda^2 = 0
    fam["semisimple"] = checked(is_semisimple(induced_algebra(coideal)), false);
    fam["unimodular"] = is_unimodular(coideal);
    fam["frobenius"] = frobenius_summary(induced_algebra(coideal), seed);
    fam["cointegrals"] = cointegral_cells_json(table, "N_dx", fam["parameter"].get<std::string>());
    fam["pass"] = collect_pass(fam);
    return fam;
}

}  // namespace

nlohmann::ordered_json taft_report_document(int n, const std::vector<std::string>& beta_tokens,
                                            const std::vector<int>& ds, std::uint64_t seed,
                                            int jobs) {
    const TaftAlgebra t = build_taft(n);
    std::vector<CycScalar> betas;
    for (const auto& token : beta_tokens) {
        const CycScalar beta = parse_beta_token(n, token);
        if (beta.is_zero()) throw std::invalid_argument("beta must be nonzero");
        bool seen = false;
        for (const auto& b : betas)
            if (b == beta) { seen = true; break; }
        if (!seen) betas.push_back(beta);
    }
    for (int d : ds)
        if (d < 1 || n % d != 0)
            throw std::invalid_argument("each d must divide n; got " + std::to_string(d));

    const CointegralTableReport table = cointegral_tables(t, betas, ds);

    // One task per family instance, merged in parameter order.
    struct Task {
        std::function<ordered_json()> run;
    };
    std::vector<Task> tasks;
    for (const auto& beta : betas)
        tasks.push_back({[&t, beta, &table, seed] { return family_v_p_beta(t, beta, table, seed); }});
    for (int d : ds) tasks.push_back({[&t, d, &table, seed] { return family_h_d(t, d, table, seed); }});
    for (int d : ds) tasks.push_back({[&t, d, &table, seed] { return family_n_dx(t, d, table, seed); }});

    std::vector<ordered_json> results(tasks.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i].run();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    results[i] = tasks[i].run();
                }
            });
        for (auto& th : pool) th.join();
    }

    std::string canonical = "n=" + std::to_string(n) + ";betas=";
    for (const auto& b : betas) canonical += scalar_to_string(b) + "|";
    canonical += ";ds=";
    for (int d : ds) canonical += std::to_string(d) + "|";
    canonical += ";seed=" + std::to_string(seed);

    ordered_json doc;
    doc["tool_version"] = tool_version;
    doc["input_digest"] = digest_hex(canonical);
    doc["n"] = n;
    doc["conductor"] = n;
    ordered_json beta_json = ordered_json::array();
    for (const auto& b : betas) beta_json.push_back(scalar_to_string(b));
    doc["betas"] = std::move(beta_json);
    doc["divisors"] = ds;
    doc["seed"] = seed;
    ordered_json ambient;
    ambient["hopf_axioms"] = checked(verify_hopf_axioms(*t.hopf).all_passed(), true);
    ambient["semisimple"] = checked(is_semisimple(t.hopf->algebra()), false);
    ambient["unimodular"] =
        is_unimodular(CoidealSubalgebra::analyze(t.hopf, Subspace::full(t.hopf->dim(), n)));
    doc["ambient"] = std::move(ambient);
    ordered_json families = ordered_json::array();
    for (auto& r : results) families.push_back(std::move(r));
    doc["families"] = std::move(families);
    doc["all_checks_passed"] = collect_pass(doc);
    return doc;
}

std::string render_markdown(const ordered_json& doc) {
    std::ostringstream md;
    md << "# Taft report (n = " << doc["n"].get<int>() << ")\n\n";
    md << "- tool version: " << doc["tool_version"].get<std::string>() << "\n";
    md << "- input digest: `" << doc["input_digest"].get<std::string>() << "`\n";
    md << "- ambient Hopf axioms: "
       << (doc["ambient"]["hopf_axioms"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    md << "- all checks passed: " << (doc["all_checks_passed"].get<bool>() ? "yes" : "NO") << "\n\n";

    md << "## Families\n\n";
    md << "| family | parameter | dim | dim L | dim R | L closed form | class | semisimple | "
          "unimodular | frobenius | pass |\n";
    md << "|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& fam : doc["families"]) {
        const auto& in = fam["integrals"];
        std::string cls = fam["projection_class"].is_object()
                              ? fam["projection_class"]["value"].get<std::string>()
                              : fam["projection_class"].get<std::string>();
        md << "| " << fam["family"].get<std::string>() << " | " << fam["parameter"].get<std::string>()
           << " | " << fam["dim"].get<int>() << " | " << in["dim_L"].get<int>() << " | "
           << in["dim_R"].get<int>() << " | " << (in["L_matches_closed_form"].get<bool>() ? "yes" : "NO")
           << " | " << cls << " | " << (fam["semisimple"]["value"].get<bool>() ? "yes" : "no") << " | "
           << (fam["unimodular"].get<bool>() ? "yes" : "no") << " | "
           << fam["frobenius"].get<std::string>() << " | "
           << (fam["pass"].get<bool>() ? "pass" : "FAIL") << " |\n";
    }

    md << "\n## Cointegral tables\n\n";
    md << "| family | parameter | g exponent | dim | dim pass | values pass |\n";
    md << "|---|---|---|---|---|---|\n";
    for (const auto& fam : doc["families"])
        for (const auto& cell : fam["cointegrals"])
            md << "| " << fam["family"].get<std::string>() << " | "
               << fam["parameter"].get<std::string>() << " | " << cell["g_exponent"].get<int>()
               << " | " << cell["dim"].get<int>() << " | "
               << (cell["dim_pass"].get<bool>() ? "yes" : "NO") << " | "
               << (cell["values_pass"].get<bool>() ? "yes" : "NO") << " |\n";
    return md.str();
}

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("JSON parse error: ") + e.what());
    }
}

void write_output(const std::string& out_path, const std::string& content, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot write file: " + out_path);
    f << content;
}

LoadedHopf load_verified_hopf(const std::string& path, std::ostream& err) {
    LoadedHopf loaded = hopf_from_json(read_json_file(path));
    const AxiomReport report = verify_hopf_axioms(*loaded.hopf);
    if (!report.all_passed()) {
        std::string failing;
        for (const auto& c : report.checks)
            if (!c.passed) failing += (failing.empty() ? "" : ", ") + c.name;
        err << "axiom verification failed: " << failing << "\n";
        throw std::domain_error("axiom verification failed");
    }
    return loaded;
}

int cmd_taft_report(int n, const std::string& beta_csv, const std::string& d_csv,
                    const std::string& out_path, const std::string& format, int jobs,
                    std::ostream& out, std::ostream& err) {
    std::vector<std::string> beta_tokens;
    std::vector<int> ds;
    ordered_json doc;
    try {
        std::stringstream ss(beta_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) beta_tokens.push_back(tok);
        if (d_csv.empty()) {
            ds = divisors(n);
        } else {
            std::stringstream ds_stream(d_csv);
            while (std::getline(ds_stream, tok, ',')) ds.push_back(std::stoi(tok));
        }
        doc = taft_report_document(n, beta_tokens, ds, seed_from_env(), jobs);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (format == "markdown")
        write_output(out_path, render_markdown(doc), out);
    else
        write_output(out_path, doc.dump(2) + "\n", out);
    return doc["all_checks_passed"].get<bool>() ? exit_ok : exit_math;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    (void)err;
    LoadedHopf loaded = hopf_from_json(read_json_file(path));
    const AxiomReport report = verify_hopf_axioms(*loaded.hopf);
    ordered_json j;
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["all_passed"] = report.all_passed();
    out << j.dump(2) << "\n";
    return report.all_passed() ? exit_ok : exit_math;
}

int cmd_integrals(const std::string& algebra_path, const std::string& subspace_path,
                  const std::string& mu_path, std::ostream& out, std::ostream& err) {
    LoadedHopf loaded = load_verified_hopf(algebra_path, err);
    const auto& h = loaded.hopf;
    const Subspace space = subspace_from_json(read_json_file(subspace_path), h->conductor());
    const CoidealSubalgebra coideal = CoidealSubalgebra::analyze(h, space);
    Functional mu = functional_from_json(read_json_file(mu_path), h->conductor());
    if (static_cast<int>(mu.coeffs.size()) != coideal.dim())
        throw SchemaError("mu must have one value per echelon basis vector of the subspace");

    const Subspace l = left_integrals(coideal, mu);
    const Subspace r = right_integrals(coideal, mu);
    ordered_json j;
    j["family"] = "user";
    j["mu"] = functional_to_json(mu);
    j["flags"] = {{"subalgebra", coideal.is_subalgebra},
                  {"left_coideal", coideal.is_left_coideal},
                  {"contains_unit", coideal.contains_unit}};
    j["dim_L"] = l.dim();
    j["dim_R"] = r.dim();
    j["basis_L"] = subspace_basis_json(l);
    j["basis_R"] = subspace_basis_json(r);
    if (l.dim() == 1) {
        const Vec lambda = l.basis_vector(0);
        if (lambda_integral_type(*h, lambda)) j["nondegenerate"] = is_nondegenerate(h, lambda);
        // Rescale to an idempotent when the line permits it.
        const Vec sq = h->multiply(lambda, lambda);
        auto coords = Subspace::from_spanning({lambda}, h->dim(), h->conductor()).coordinates(sq);
        if (coords && !(*coords)[0].is_zero()) {
            const Vec p = scale((*coords)[0].inverse(), lambda);
            j["projection_class"] = to_string(classify_group_like_projection(*h, p));
        }
    }
    out << j.dump(2) << "\n";
    return exit_ok;
}

int cmd_cointegrals(const std::string& algebra_path, const std::string& coideal_path, int g_index,
                    std::ostream& out, std::ostream& err) {
    LoadedHopf loaded = load_verified_hopf(algebra_path, err);
    const auto& h = loaded.hopf;
    const Subspace space = subspace_from_json(read_json_file(coideal_path), h->conductor());
    if (g_index < 0 || g_index >= h->dim())
        throw SchemaError("g index out of range");
    const Vec g_vec = unit_vec(h->dim(), h->conductor(), g_index);
    if (!is_group_like(*h, g_vec))
        throw std::domain_error("basis vector " + std::to_string(g_index) + " is not group-like");
    const GroupLike g(*h, g_vec);
    const Subspace sols = g_cointegrals(*h, space, g);
    ordered_json j;
    j["family"] = "user";
    j["g_index"] = g_index;
    j["dim"] = sols.dim();
    ordered_json basis = ordered_json::array();
    for (int i = 0; i < sols.dim(); ++i) {
        ordered_json phi;
        for (int m = 0; m < space.dim(); ++m)
            phi["b" + std::to_string(m)] = scalar_to_string(sols.basis_vector(i)[m]);
        basis.push_back(std::move(phi));
    }
    j["phi_values"] = std::move(basis);
    if (sols.dim() >= 1)
        j["faithful"] =
            cointegral_faithful(*h, space, sols.basis_vector(0)) == Faithfulness::yes;
    out << j.dump(2) << "\n";
    return exit_ok;
}

int cmd_export(int taft_n, const std::string& from_path, const std::string& out_path,
               std::ostream& out) {
    ordered_json j;
    if (!from_path.empty()) {
        LoadedHopf loaded = hopf_from_json(read_json_file(from_path));
        j = hopf_to_json(*loaded.hopf, loaded.basis_labels);
    } else {
        const TaftAlgebra t = build_taft(taft_n);
        j = hopf_to_json(*t.hopf, taft_basis_labels(t));
    }
    write_output(out_path, j.dump(2) + "\n", out);
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact integrals and cointegrals on coideal subalgebras of Hopf algebras"};
    app.require_subcommand(1);

    auto* report = app.add_subcommand("taft-report", "Reproduce the closed-form Taft tables");
    int n = 0;
    std::string beta_csv, d_csv, out_path, format = "json";
    int jobs = 1;
    report->add_option("--n", n, "Taft parameter (n >= 2)")->required();
    report->add_option("--beta", beta_csv, "comma list of beta values (rational, w, or w^k)");
    report->add_option("--d", d_csv, "comma list of divisors of n (default: all)");
    report->add_option("--out", out_path, "output path (default: stdout)");
    report->add_option("--format", format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    report->add_option("--jobs", jobs, "parallel workers across family cells")
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Verify all Hopf axioms of a JSON algebra");
    std::string verify_path;
    verify->add_option("file", verify_path, "Hopf algebra JSON")->required();

    auto* integrals = app.add_subcommand("integrals", "Solve L/R mu-integrals on a coideal subalgebra");
    std::string alg_path, sub_path, mu_path;
    integrals->add_option("algebra", alg_path, "Hopf algebra JSON")->required();
    integrals->add_option("subspace", sub_path, "subspace JSON")->required();
    integrals->add_option("mu", mu_path, "functional JSON (values on the echelon basis)")->required();

    auto* coint = app.add_subcommand("cointegrals", "Solve g-cointegrals on a left coideal");
    std::string calg_path, coid_path;
    int g_index = 0;
    coint->add_option("algebra", calg_path, "Hopf algebra JSON")->required();
    coint->add_option("coideal", coid_path, "coideal subspace JSON")->required();
    coint->add_option("--g", g_index, "basis index of the group-like g")->required();

    auto* exp = app.add_subcommand("export", "Export a built-in algebra (or re-export a file)");
    int taft_n = 0;
    std::string from_path, export_out;
    exp->add_option("--taft", taft_n, "export the Taft algebra H_{n^2}");
    exp->add_option("--from", from_path, "re-export a loaded JSON file");
    exp->add_option("--out", export_out, "output path (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return exit_ok;
        }
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (report->parsed()) {
            if (n < 2) {
                err << "error: --n must be at least 2\n";
                return exit_usage;
            }
            if (beta_csv.empty()) beta_csv = "1,2,-1,w";
            return cmd_taft_report(n, beta_csv, d_csv, out_path, format, jobs, out, err);
        }
        if (verify->parsed()) return cmd_verify(verify_path, out, err);
        if (integrals->parsed()) return cmd_integrals(alg_path, sub_path, mu_path, out, err);
        if (coint->parsed()) return cmd_cointegrals(calg_path, coid_path, g_index, out, err);
        if (exp->parsed()) {
            if (from_path.empty() && taft_n < 2) {
                err << "error: export needs --taft N (N >= 2) or --from FILE\n";
                return exit_usage;
            }
            return cmd_export(taft_n, from_path, export_out, out);
        }
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return exit_schema;
    } catch (const nlohmann::json::exception& e) {
        err << "schema error: " << e.what() << "\n";
        return exit_schema;
    } catch (const std::domain_error& e) {
        err << "math check failed: " << e.what() << "\n";
        return exit_math;
    } catch (const std::invalid_argument& e) {
        err << "math check failed: " << e.what() << "\n";
        return exit_math;
    } catch (const std::logic_error& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return exit_math;
    }
    return exit_usage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace hopfint::cli

// Acceptance gate: runs the eight pinned end-to-end checks and prints one
// pass/fail line for each.  Exits nonzero if any check fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "fnf/io.hpp"

using namespace fnf;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what) {
    std::printf("criterion %d: %s - %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

FieldElement fe(const std::string& s) { return parse_coefficient(s); }

std::array<FieldElement, 3> standard_lambda() { return {fe("t1"), fe("t2"), fe("1-t1-t2")}; }

FormalMapJet random_identity_tangent_map(std::uint64_t seed, int order) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    Jet2 u = Jet2::monomial(order, 1, 0);
    Jet2 v = Jet2::monomial(order, 0, 1);
    for (int d = 2; d <= 3; ++d)
        for (int i = 0; i <= d; ++i) {
            u.add_coeff(i, d - i, FieldElement(coeff(rng)));
            v.add_coeff(i, d - i, FieldElement(coeff(rng)));
        }
    return FormalMapJet(std::move(u), std::move(v));
}

bool support_within(const FieldElement& v, int max_gen) {
    for (int g : v.support())
        if (g > max_gen) return false;
    return true;
}

bool jet_support_within(const Jet2& j, int max_gen) {
    for (auto& [key, v] : j.coefficients())
        if (!support_within(v, max_gen)) return false;
    return true;
}

// ---- CLI helpers -----------------------------------------------------------

std::string cli_path() {
    const char* p = std::getenv("FNF_CLI");
    return p ? std::string(p) : std::string();
}

int run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const json& doc) {
    std::ofstream out(path, std::ios::binary);
    out << doc.dump(2) << "\n";
}

std::string temp_dir() {
    char tmpl[] = "/tmp/fnf-acceptance-XXXXXX";
    const char* d = mkdtemp(tmpl);
    return d ? std::string(d) : std::string("/tmp");
}

}  // namespace

int main() {
    const int N = 12;
    const std::string dir = temp_dir();

    OneFormJet omega = construct_standard_example(standard_lambda(), {fe("t3"), fe("t4"), fe("t5")}, N);
    NormalForm base_nf;
    ReductionTranscript base_transcript;

    // 1. invariance of b under 25 seeded identity-tangent perturbations
    try {
        auto start = std::chrono::steady_clock::now();
        auto [nf, transcript] = reduce_to_normal_form(omega);
        base_nf = nf;
        base_transcript = transcript;
        bool ok = nf.b.size() == static_cast<size_t>(N - 2);
        for (int trial = 0; ok && trial < 25; ++trial) {
            FormalMapJet phi = random_identity_tangent_map(9000 + trial, N);
            auto [nfp, tp] = reduce_to_normal_form(pullback(omega, phi));
            ok = nfp.b == nf.b && nfp.residues == nf.residues;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok = ok && secs < 300.0;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "b-vector invariant under 25 seeded degree-3 perturbations at order %d (%.1fs)", N, secs);
        report(1, ok, buf);
    } catch (const std::exception& e) {
        report(1, false, std::string("exception: ") + e.what());
    }

    // 2. field of definition: everything stays inside Q(t1..t5)
    try {
        bool ok = true;
        for (auto& g : field_report(base_nf).generators) ok = ok && g.index <= 5;
        for (auto& r : base_transcript.rectification) ok = ok && support_within(r.c, 5);
        for (auto& st : base_transcript.steps) {
            ok = ok && jet_support_within(st.alpha, 5) && jet_support_within(st.beta, 5) &&
                 jet_support_within(st.delta, 5) && support_within(st.b, 5);
        }
        // and the same holds after a perturbation with integer coefficients
        auto [nfp, tp] = reduce_to_normal_form(pullback(omega, random_identity_tangent_map(424242, N)));
        for (auto& st : tp.steps) {
            ok = ok && jet_support_within(st.alpha, 5) && jet_support_within(st.beta, 5) &&
                 jet_support_within(st.delta, 5) && support_within(st.b, 5);
        }
        report(2, ok, "normal form and transcript coefficients stay inside Q(t1..t5)");
    } catch (const std::exception& e) {
        report(2, false, std::string("exception: ") + e.what());
    }

    // 3. homothety covariance: (2x, 2y) pullback scaled by 1/8 sends b_k to 2^{k+1} b_k
    try {
        FieldElement two(2), z = FieldElement::zero();
        OneFormJet scaled = apply_linear_change(omega, {{{two, z}, {z, two}}}).scaled(fe("1/8"));
        auto [nfs, ts] = reduce_to_normal_form(scaled);
        bool ok = nfs.b.size() == base_nf.b.size();
        for (size_t k = 0; ok && k < nfs.b.size(); ++k)
            ok = nfs.b[k] == base_nf.b[k] * two.pow(static_cast<unsigned>(k) + 1);
        ok = ok && invariant_equivalent(base_nf, nfs) && homothety_action(base_nf, two).b == nfs.b;
        report(3, ok, "homothety s=2 scales b_k by 2^{k+1} and preserves equivalence");
    } catch (const std::exception& e) {
        report(3, false, std::string("exception: ") + e.what());
    }

    // 4. per-degree residual exactness and b-uniqueness for 3 <= m <= 12
    try {
        OneFormJet eta = pullback(omega, random_identity_tangent_map(5150, N));
        auto [rectified, rsteps] = rectify_separatrix(eta);
        eta = std::move(rectified);
        OneFormJet eta2 = eta.homogeneous_part(2);
        bool ok = true;
        for (int m = 3; m <= N && ok; ++m) {
            ReductionStep step = homological_solve(m, eta2, eta.homogeneous_part(m));
            // explicit kernel check: no kernel vector moves the b unknown
            LinearSolveResult sol = solve_linear_system(homological_matrix(m, eta2),
                                                        homological_rhs(m, eta.homogeneous_part(m)));
            ok = ok && sol.consistent;
            for (auto& kvec : sol.kernel) ok = ok && kvec.back().is_zero();
            // residual exactness: after the step, degree m is exactly b x^{m-1}(x dy - y dx)
            eta = apply_reduction_step(eta, step);
            ok = ok && eta.homogeneous_part(m) == normal_form_part(N, m, step.b);
        }
        report(4, ok, "degree-m residual exactness and b-uniqueness for 3 <= m <= 12");
    } catch (const std::exception& e) {
        report(4, false, std::string("exception: ") + e.what());
    }

    // 5. CLI rejects non-generic inputs with exit code 3
    try {
        bool ok = !cli_path().empty();
        if (ok) {
            OneFormJet rational = construct_standard_example({fe("1/2"), fe("1/3"), fe("1/6")}, {}, N);
            write_file(dir + "/rational.json", form_to_json(rational));
            ok = run_cli("reduce --input " + dir + "/rational.json") == 3;

            OneFormJet dicritic(N);  // x (x dy - y dx): tangent cone vanishes
            dicritic.P.set_coeff(1, 1, FieldElement(-1));
            dicritic.Q.set_coeff(2, 0, FieldElement(1));
            write_file(dir + "/dicritic.json", form_to_json(dicritic));
            ok = ok && run_cli("reduce --input " + dir + "/dicritic.json") == 3;
        }
        report(5, ok, "rational residues and dicritic cones exit with code 3");
    } catch (const std::exception& e) {
        report(5, false, std::string("exception: ") + e.what());
    }

    // 6. rectification on omega + t6 y^3 dy: c_2 = t6/(1+t1), then Q(0, y) = 0 mod y^13
    try {
        OneFormJet seeded = omega;
        seeded.Q.add_coeff(0, 3, fe("t6"));
        auto [rectified, steps] = rectify_separatrix(seeded);
        bool ok = !steps.empty() && steps.front().k == 2 && steps.front().c == fe("t6/(1+t1)");
        for (int j = 0; j <= N; ++j) ok = ok && rectified.Q.coeff(0, j).is_zero();
        report(6, ok, "first rectification coefficient is t6/(1+t1) and Q(0,y) vanishes to order 13");
    } catch (const std::exception& e) {
        report(6, false, std::string("exception: ") + e.what());
    }

    // 7. assembled homological system matches brute-force symbolic expansion
    try {
        // the quadratic part only involves t1, t2, so t5.. are free for unknowns
        OneFormJet eta2 = omega.homogeneous_part(2);
        std::mt19937_64 rng(31337);
        std::uniform_int_distribution<int> coeff(-3, 3);
        bool ok = true;
        for (int m : {3, 4}) {
            OneFormJet eta_m(N);
            for (int i = 0; i <= m; ++i) {
                eta_m.P.add_coeff(i, m - i, FieldElement(coeff(rng)));
                eta_m.Q.add_coeff(i, m - i, FieldElement(coeff(rng)));
            }
            auto amons = detail::homogeneous_basis(m - 1);
            auto dmons = detail::homogeneous_basis(m - 2);
            // symbolic unknowns: fresh generators t5, t6, ...
            ReductionStep sym(m, N);
            int g = 5;
            std::vector<FieldElement> u;
            for (auto& mk : amons) {
                sym.alpha.set_coeff(mk.first, mk.second, FieldElement::generator(g));
                u.push_back(FieldElement::generator(g++));
            }
            for (auto& mk : amons) {
                sym.beta.set_coeff(mk.first, mk.second, FieldElement::generator(g));
                u.push_back(FieldElement::generator(g++));
            }
            for (auto& mk : dmons) {
                sym.delta.set_coeff(mk.first, mk.second, FieldElement::generator(g));
                u.push_back(FieldElement::generator(g++));
            }
            u.push_back(FieldElement::generator(g));

            OneFormJet brute = apply_reduction_step(eta2 + eta_m, sym).homogeneous_part(m);
            FMatrix A = homological_matrix(m, eta2);
            FVector rhs = homological_rhs(m, eta_m);
            auto eqmons = detail::homogeneous_basis(m);
            for (size_t r = 0; r < 2 * eqmons.size() && ok; ++r) {
                FieldElement assembled = -rhs[r];
                // the b column encodes the target, not a contribution
                for (size_t c = 0; c + 1 < A[r].size(); ++c) assembled += A[r][c] * u[c];
                auto [i, j] = eqmons[r % eqmons.size()];
                FieldElement actual = r < eqmons.size() ? brute.P.coeff(i, j) : brute.Q.coeff(i, j);
                ok = assembled == actual;
            }
        }
        report(7, ok, "homological system for m=3,4 matches brute-force symbolic pullback");
    } catch (const std::exception& e) {
        report(7, false, std::string("exception: ") + e.what());
    }

    // 8. serialization round trips and byte-deterministic seeded perturbation
    try {
        std::mt19937_64 rng(20260824);
        std::uniform_int_distribution<int> order_dist(2, 8);
        std::uniform_int_distribution<int> small(-5, 5);
        std::uniform_int_distribution<int> gen(1, 4);
        auto random_coefficient = [&]() {
            FieldElement v = FieldElement(small(rng)) + FieldElement::generator(gen(rng)) * FieldElement(small(rng));
            FieldElement d = FieldElement::generator(gen(rng)) + FieldElement(small(rng));
            return d.is_zero() ? v : v / d;
        };
        auto random_jet = [&](int order, int min_degree) {
            Jet2 j(order);
            std::uniform_int_distribution<int> deg(min_degree, order);
            for (int t = 0; t < 5; ++t) {
                int d = deg(rng);
                std::uniform_int_distribution<int> split(0, d);
                int i = split(rng);
                j.set_coeff(i, d - i, random_coefficient());
            }
            return j;
        };
        bool ok = true;
        for (int trial = 0; trial < 50 && ok; ++trial) {
            int n = order_dist(rng);
            OneFormJet eta(random_jet(n, 2), random_jet(n, 2));
            json doc = form_to_json(eta);
            OneFormJet back = form_from_json(doc);
            ok = back == eta && form_to_json(back).dump() == doc.dump();
        }
        for (int trial = 0; trial < 50 && ok; ++trial) {
            int n = order_dist(rng);
            FormalMapJet phi(Jet2::monomial(n, 1, 0) + random_jet(n, 2), Jet2::monomial(n, 0, 1) + random_jet(n, 2));
            json doc = map_to_json(phi);
            FormalMapJet back = map_from_json(doc);
            ok = back == phi && map_to_json(back).dump() == doc.dump();
        }
        ok = ok && !cli_path().empty();
        if (ok) {
            ok = run_cli("perturb --seed 77 --output " + dir + "/p1.json") == 0 &&
                 run_cli("perturb --seed 77 --output " + dir + "/p2.json") == 0 &&
                 run_cli("perturb --seed 78 --output " + dir + "/p3.json") == 0;
            std::string a = slurp(dir + "/p1.json");
            ok = ok && !a.empty() && a == slurp(dir + "/p2.json") && a != slurp(dir + "/p3.json");
        }
        report(8, ok, "100 randomized documents round trip; seeded perturb is byte-deterministic");
    } catch (const std::exception& e) {
        report(8, false, std::string("exception: ") + e.what());
    }

    if (failures) std::printf("%d of 8 criteria failed\n", failures);
    else std::printf("all 8 criteria passed\n");
    return failures ? 1 : 0;
}

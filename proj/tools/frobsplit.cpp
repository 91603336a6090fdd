// Batch verification driver: loads root data, runs the verification suites,
// computes contractions, and emits canonical JSON reports.
// Exit codes: 0 = pass, 1 = counterexample found, 2 = usage or input error.

#include "frobsplit/character.hpp"
#include "frobsplit/compat.hpp"
#include "frobsplit/pbw.hpp"
#include "frobsplit/root_datum.hpp"
#include "frobsplit/torus.hpp"
#include "frobsplit/weight_module.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace frobsplit;

namespace {

std::string resolve_datum(const std::string& path) {
    if (std::filesystem::exists(path)) return path;
    if (const char* corpus = std::getenv("FROBSPLIT_CORPUS")) {
        auto candidate = std::filesystem::path(corpus) / path;
        if (std::filesystem::exists(candidate)) return candidate.string();
    }
    throw std::runtime_error("unknown datum file: " + path);
}

int emit(VerificationReport rep, const std::string& out,
         std::chrono::steady_clock::time_point start) {
    rep.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start).count());
    std::string text = rep.to_json().dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write report: " + out);
        f << text;
    }
    return rep.pass() ? 0 : 1;
}

std::shared_ptr<const AlgebraContext> load_context(const std::string& datum,
                                                   std::int64_t p) {
    return std::make_shared<AlgebraContext>(AlgebraContext::make(
        RootDatum::load(resolve_datum(datum)), Ring::prime_field(p)));
}

VerificationReport run_mu0_checks(const std::string& datum, std::int64_t p) {
    auto ctx = load_context(datum, p);
    unsigned rank = ctx->rank;
    VerificationReport rep;
    rep.check = "mu0";
    rep.parameters = {{"datum", ctx->datum.name}, {"p", p}, {"rank", rank}};

    TorusElement mu = mu0(p, rank);
    ++rep.trials;
    if (!(mu * mu == mu)) rep.fail({{"part", "idempotent"}});

    // eval(mu0, h) = indicator of p | h componentwise, h in [0, 3p)^rank
    std::vector<IntVec> points;
    IntVec cur(rank, 0);
    auto rec = [&](auto&& self, unsigned pos) -> void {
        if (pos == rank) { points.push_back(cur); return; }
        for (std::int64_t v = 0; v < 3 * p; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    for (const auto& h : points) {
        ++rep.trials;
        bool divisible = true;
        for (const auto& v : h)
            if (v % p != 0) { divisible = false; break; }
        if (mu.eval(h) != (divisible ? 1 : 0))
            rep.fail({{"part", "indicator"}, {"h", [&] {
                          std::vector<std::int64_t> hh;
                          for (const auto& v : h) hh.push_back(static_cast<std::int64_t>(v));
                          return hh;
                      }()}});
    }

    // mu0 commutes with E^(pn) and F^(pn) for pn <= 3p
    PbwElement mup = mu0_pbw(ctx);
    for (unsigned pn = static_cast<unsigned>(p); pn <= 3 * p; pn += static_cast<unsigned>(p)) {
        ++rep.trials;
        PbwElement e = PbwElement::e_power(ctx, pn);
        PbwElement f = PbwElement::f_power(ctx, pn);
        if (!(mup * e).equal(e * mup)) rep.fail({{"part", "commute_E"}, {"pn", pn}});
        if (!(mup * f).equal(f * mup)) rep.fail({{"part", "commute_F"}, {"pn", pn}});
    }
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the Frobenius splitting of distribution algebras"};
    app.require_subcommand(1);

    std::string datum, against, out, part = "all", lambda_str;
    std::int64_t p = 2, a_lo = -6, a_hi = 6, c_lo = -6, c_hi = 6;
    unsigned deg = 3, b_max = 8, a_max = 3, rank = 1, bound = 2, jobs = 1, n_top = 8;
    unsigned trials = 0;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out, "report path (default stdout)");
    };

    auto* rootdatum = app.add_subcommand("rootdatum", "root-datum operations");
    auto* rd_validate = rootdatum->add_subcommand("validate", "check root-datum axioms");
    rd_validate->add_option("--datum", datum)->required();
    add_common(rd_validate);
    auto* rd_zext = rootdatum->add_subcommand("z-extend", "construct the z-extension");
    rd_zext->add_option("--datum", datum)->required();
    rd_zext->add_option("--iso-against", against, "search for an isomorphism of the result");
    rd_zext->add_option("--bound", bound);
    add_common(rd_zext);
    auto* rd_iso = rootdatum->add_subcommand("iso", "bounded isomorphism search");
    rd_iso->add_option("--datum", datum)->required();
    rd_iso->add_option("--against", against)->required();
    rd_iso->add_option("--bound", bound);
    add_common(rd_iso);

    auto* verify = app.add_subcommand("verify", "verification suites");
    auto* v_lemma = verify->add_subcommand("lemma11", "torus Lemma identities");
    v_lemma->add_option("--p", p)->required();
    v_lemma->add_option("--rank", rank);
    v_lemma->add_option("--a-lo", a_lo);
    v_lemma->add_option("--a-hi", a_hi);
    v_lemma->add_option("--c-lo", c_lo);
    v_lemma->add_option("--c-hi", c_hi);
    v_lemma->add_option("--b-max", b_max);
    v_lemma->add_option("--part", part, "i, ii, iii or all");
    add_common(v_lemma);
    auto* v_borel = verify->add_subcommand("borel", "Borel-level relations under phi");
    v_borel->add_option("--datum", datum)->required();
    v_borel->add_option("--p", p)->required();
    v_borel->add_option("--a-max", a_max);
    v_borel->add_option("--b-max", b_max);
    v_borel->add_option("--c-lo", c_lo);
    v_borel->add_option("--c-hi", c_hi);
    add_common(v_borel);
    auto* v_thm = verify->add_subcommand("theorem", "splitting theorem sweep");
    v_thm->add_option("--datum", datum)->required();
    v_thm->add_option("--p", p)->required();
    v_thm->add_option("--deg", deg);
    v_thm->add_option("--trials", trials, "sampled mode with this many pairs");
    v_thm->add_option("--seed", seed);
    v_thm->add_option("--jobs", jobs);
    add_common(v_thm);
    auto* v_compat = verify->add_subcommand("compat", "z-extension projection compatibility");
    v_compat->add_option("--datum", datum)->required();
    v_compat->add_option("--p", p)->required();
    v_compat->add_option("--deg", deg);
    add_common(v_compat);
    auto* v_mu0 = verify->add_subcommand("mu0", "idempotent properties");
    v_mu0->add_option("--datum", datum)->required();
    v_mu0->add_option("--p", p)->required();
    add_common(v_mu0);

    auto* module = app.add_subcommand("module", "weight-module computations");
    auto* m_contract = module->add_subcommand("contract", "Frobenius contraction of a Weyl module");
    m_contract->add_option("--datum", datum)->required();
    m_contract->add_option("--p", p)->required();
    m_contract->add_option("--lambda", lambda_str, "highest weight, comma separated")->required();
    add_common(m_contract);
    auto* m_round = module->add_subcommand("roundtrip", "contract(twist(V(n))) = V(n)");
    m_round->add_option("--datum", datum)->required();
    m_round->add_option("--p", p)->required();
    m_round->add_option("--n-max", n_top);
    add_common(m_round);
    auto* m_donkin = module->add_subcommand("donkin", "G1-invariant dimension cross-check");
    m_donkin->add_option("--datum", datum)->required();
    m_donkin->add_option("--p", p)->required();
    m_donkin->add_option("--n-max", n_top);
    add_common(m_donkin);
    auto* m_chars = module->add_subcommand("characters", "character decompositions of contractions");
    m_chars->add_option("--p", p)->required();
    m_chars->add_option("--n-max", n_top);
    add_common(m_chars);

    CLI11_PARSE(app, argc, argv);
    auto start = std::chrono::steady_clock::now();

    try {
        if (*rd_validate)
            return emit(validate(RootDatum::load(resolve_datum(datum))), out, start);

        if (*rd_zext) {
            auto rd = RootDatum::load(resolve_datum(datum));
            auto [ext, proj] = z_extend(rd);
            VerificationReport rep;
            rep.check = "rootdatum.z_extend";
            rep.parameters = {{"datum", rd.name}, {"result", ext.to_json()}};
            rep.trials = 1;
            if (!against.empty()) {
                auto other = RootDatum::load(resolve_datum(against));
                auto iso = find_isomorphism(ext, other, bound);
                ++rep.trials;
                if (iso) {
                    nlohmann::json m = nlohmann::json::array();
                    for (const auto& row : iso->on_cocharacters) {
                        nlohmann::json r = nlohmann::json::array();
                        for (const auto& v : row) r.push_back(static_cast<std::int64_t>(v));
                        m.push_back(r);
                    }
                    rep.parameters["iso_matrix"] = m;
                } else {
                    rep.fail({{"part", "isomorphism"}, {"against", other.name},
                              {"bound", bound}});
                }
            }
            return emit(std::move(rep), out, start);
        }

        if (*rd_iso) {
            auto rd1 = RootDatum::load(resolve_datum(datum));
            auto rd2 = RootDatum::load(resolve_datum(against));
            VerificationReport rep;
            rep.check = "rootdatum.iso";
            rep.parameters = {{"datum", rd1.name}, {"against", rd2.name}, {"bound", bound}};
            rep.trials = 1;
            auto iso = find_isomorphism(rd1, rd2, bound);
            if (iso) {
                nlohmann::json m = nlohmann::json::array();
                for (const auto& row : iso->on_cocharacters) {
                    nlohmann::json r = nlohmann::json::array();
                    for (const auto& v : row) r.push_back(static_cast<std::int64_t>(v));
                    m.push_back(r);
                }
                rep.parameters["iso_matrix"] = m;
            } else {
                rep.fail({{"part", "isomorphism"}, {"bound", bound},
                          {"note", "inconclusive within bound, not a disproof"}});
            }
            return emit(std::move(rep), out, start);
        }

        if (*v_lemma) {
            VerificationReport total;
            total.check = "lemma11";
            total.parameters = {{"p", p}, {"rank", rank}, {"a", {a_lo, a_hi}},
                                {"c", {c_lo, c_hi}}, {"b_max", b_max}, {"part", part}};
            auto run = [&](Lemma11Part which) {
                auto rep = verify_lemma_1_1(p, rank, a_lo, a_hi, c_lo, c_hi, b_max, which);
                total.trials += rep.trials;
                for (auto& f : rep.failures) total.fail(std::move(f));
            };
            if (part == "i" || part == "all") run(Lemma11Part::i);
            if (part == "ii" || part == "all") run(Lemma11Part::ii);
            if (part == "iii" || part == "all") run(Lemma11Part::iii);
            if (part != "i" && part != "ii" && part != "iii" && part != "all")
                throw CLI::ValidationError("--part must be i, ii, iii or all");
            return emit(std::move(total), out, start);
        }

        if (*v_borel)
            return emit(verify_borel(load_context(datum, p), a_max, b_max, c_lo, c_hi),
                        out, start);

        if (*v_thm) {
            TheoremMode mode;
            if (trials > 0) {
                mode.exhaustive = false;
                mode.samples = trials;
                mode.seed = seed;
            }
            return emit(verify_theorem(load_context(datum, p), deg, mode, jobs), out, start);
        }

        if (*v_compat) {
            auto rd = RootDatum::load(resolve_datum(datum));
            auto [ext, morphism] = z_extend(rd);
            auto proj = TorusProjection::from_morphism(morphism);
            return emit(verify_compat(proj, p, deg), out, start);
        }

        if (*v_mu0) return emit(run_mu0_checks(datum, p), out, start);

        if (*m_contract) {
            auto ctx = load_context(datum, p);
            IntVec lambda;
            std::stringstream ss(lambda_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) lambda.emplace_back(std::stoll(tok));
            if (lambda.size() != ctx->rank)
                throw std::runtime_error("lambda length != rank");
            auto m = weyl_module(ctx, lambda);
            auto c = contract(m);
            VerificationReport rep = validate_module(c);
            rep.check = "module.contract";
            rep.parameters = {{"datum", ctx->datum.name}, {"p", p},
                              {"lambda", lambda_str}, {"result", c.to_json()}};
            return emit(std::move(rep), out, start);
        }

        if (*m_round) {
            auto ctx = load_context(datum, p);
            VerificationReport rep;
            rep.check = "module.roundtrip";
            rep.parameters = {{"datum", ctx->datum.name}, {"p", p}, {"n_max", n_top}};
            for (unsigned n = 0; n <= n_top; ++n) {
                auto lambda = dominant_weight(*ctx, n);
                if (!lambda) continue; // pairing n not realized in this lattice
                ++rep.trials;
                auto v = weyl_module(ctx, *lambda);
                if (!contract(frobenius_twist(v)).equal(v))
                    rep.fail({{"n", n}});
            }
            return emit(std::move(rep), out, start);
        }

        if (*m_donkin) {
            auto ctx = load_context(datum, p);
            VerificationReport rep;
            rep.check = "module.donkin";
            rep.parameters = {{"datum", ctx->datum.name}, {"p", p}, {"n_max", n_top}};
            auto st_lambda = dominant_weight(*ctx, static_cast<unsigned>(p - 1));
            if (!st_lambda)
                throw std::runtime_error("no Steinberg weight in this lattice");
            auto st = weyl_module(ctx, *st_lambda);
            for (unsigned n = 0; n <= n_top; ++n) {
                auto lambda = dominant_weight(*ctx, n);
                if (!lambda) continue;
                ++rep.trials;
                auto v = weyl_module(ctx, *lambda);
                auto big = tensor(tensor(st, st), v);
                auto inv = g1_invariants(big);
                auto c = contract(v);
                if (inv.size() != c.dim)
                    rep.fail({{"n", n}, {"g1_dim", inv.size()}, {"contract_dim", c.dim}});
            }
            return emit(std::move(rep), out, start);
        }

        if (*m_chars) {
            auto ctx = std::make_shared<AlgebraContext>(AlgebraContext::make(
                RootDatum::load(resolve_datum("sl2.json")), Ring::prime_field(p)));
            VerificationReport rep;
            rep.check = "module.characters";
            rep.parameters = {{"p", p}, {"n_max", n_top}};
            rep.notes.push_back(
                "character-level checks are necessary conditions only: they can "
                "refute but not certify good-filtration or tilting properties");
            rep.notes.push_back(
                "tilting characters realized by the classical recursion table, "
                "not by explicit module summands");
            nlohmann::json decomps = nlohmann::json::array();
            for (unsigned n = 0; n <= n_top; ++n) {
                ++rep.trials;
                auto v = weyl_module(ctx, {Int(n)});
                auto d = decompose_character(character(contract(v)), CharacterBasis::weyl);
                if (!d.exact) rep.fail({{"part", "weyl"}, {"n", n}});
                decomps.push_back({{"n", n}, {"basis", "weyl"},
                                   {"coeffs", d.coeffs}, {"nonneg", d.nonneg}});
            }
            for (std::int64_t mt = p; mt <= 2 * p - 2; ++mt) {
                ++rep.trials;
                auto d = decompose_character(
                    contract_character(tilting_character_sl2(p, mt), p),
                    CharacterBasis::tilting, p);
                if (!d.exact || !d.nonneg) rep.fail({{"part", "tilting"}, {"m", mt}});
                decomps.push_back({{"m", mt}, {"basis", "tilting"},
                                   {"coeffs", d.coeffs}, {"nonneg", d.nonneg}});
            }
            rep.parameters["decompositions"] = decomps;
            return emit(std::move(rep), out, start);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

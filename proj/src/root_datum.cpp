#include "frobsplit/root_datum.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace frobsplit {

using Rational = boost::multiprecision::cpp_rational;

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec mat_apply(const IntMat& m, const IntVec& v) {
    IntVec out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(dot(row, v));
    return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat out(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < k; ++t)
                out[i][j] += a[i][t] * b[t][j];
    return out;
}

std::vector<Int> smith_normal_form(IntMat m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<Int> divisors;
    std::size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // find smallest nonzero pivot in the remaining block
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = r0; i < rows; ++i)
            for (std::size_t j = c0; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                    pr = i; pc = j;
                }
        if (pr == rows) break;
        std::swap(m[r0], m[pr]);
        for (auto& row : m) std::swap(row[c0], row[pc]);
        bool clean = true;
        for (std::size_t i = r0 + 1; i < rows; ++i) {
            Int q = m[i][c0] / m[r0][c0];
            if (q != 0)
                for (std::size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
            if (m[i][c0] != 0) clean = false;
        }
        for (std::size_t j = c0 + 1; j < cols; ++j) {
            Int q = m[r0][j] / m[r0][c0];
            if (q != 0)
                for (std::size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
            if (m[r0][j] != 0) clean = false;
        }
        if (!clean) continue; // smaller remainders appeared; repeat
        divisors.push_back(abs(m[r0][c0]));
        ++r0; ++c0;
    }
    // enforce the divisibility chain
    for (std::size_t i = 0; i + 1 < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j)
            if (divisors[j] % divisors[i] != 0) {
                Int g = gcd(divisors[i], divisors[j]);
                Int l = divisors[i] / g * divisors[j];
                divisors[i] = g;
                divisors[j] = l;
            }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

namespace {

// Solve A x = b over Q where the columns of A are the given vectors
// (linearly independent).  Returns the coefficient vector, or nullopt if
// inconsistent.
std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<IntVec>& basis, const IntVec& target) {
    std::size_t dim = target.size(), n = basis.size();
    std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(basis[j][i]);
        aug[i][n] = Rational(target[i]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && row < dim; ++col) {
        std::size_t pr = row;
        while (pr < dim && aug[pr][col] == 0) ++pr;
        if (pr == dim) continue;
        std::swap(aug[row], aug[pr]);
        Rational inv = aug[row][col];
        for (auto& v : aug[row]) v /= inv;
        for (std::size_t i = 0; i < dim; ++i)
            if (i != row && aug[i][col] != 0) {
                Rational f = aug[i][col];
                for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
            }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < dim; ++i)
        if (aug[i][n] != 0) return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][n];
    return x;
}

Int determinant(IntMat m) {
    std::size_t n = m.size();
    // fraction-free Gaussian elimination (Bareiss)
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n == 0 ? sign : sign * m[n - 1][n - 1];
}

// Adjugate via cofactors; ranks here are tiny.
IntMat adjugate(const IntMat& m) {
    std::size_t n = m.size();
    IntMat adj(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMat minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                IntVec row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Int cof = determinant(std::move(minor));
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = cof;
        }
    return adj;
}

} // namespace

IntVec LatticeMorphism::pullback(const IntVec& x) const {
    IntVec out(source_rank, 0);
    for (unsigned i = 0; i < target_rank; ++i)
        for (unsigned j = 0; j < source_rank; ++j)
            out[j] += matrix[i][j] * x[i];
    return out;
}

RootDatum RootDatum::from_json(const nlohmann::json& j) {
    RootDatum rd;
    rd.name = j.at("name").get<std::string>();
    rd.rank = j.at("rank").get<unsigned>();
    for (const auto& r : j.at("roots")) {
        IntVec v;
        for (const auto& x : r) v.emplace_back(x.get<std::int64_t>());
        rd.roots.push_back(std::move(v));
    }
    for (const auto& r : j.at("coroots")) {
        IntVec v;
        for (const auto& x : r) v.emplace_back(x.get<std::int64_t>());
        rd.coroots.push_back(std::move(v));
    }
    for (const auto& s : j.at("simple_indices"))
        rd.simple_indices.push_back(s.get<unsigned>());
    return rd;
}

nlohmann::json RootDatum::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["rank"] = rank;
    auto vecs = [](const std::vector<IntVec>& vs) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& v : vs) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& x : v) row.push_back(static_cast<std::int64_t>(x));
            a.push_back(row);
        }
        return a;
    };
    j["roots"] = vecs(roots);
    j["coroots"] = vecs(coroots);
    j["simple_indices"] = simple_indices;
    return j;
}

RootDatum RootDatum::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open root datum file: " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

VerificationReport validate(const RootDatum& rd) {
    VerificationReport rep;
    rep.check = "rootdatum.validate";
    rep.parameters["datum"] = rd.name;

    if (rd.roots.size() != rd.coroots.size()) {
        rep.fail({{"kind", "malformed"}, {"what", "roots/coroots length mismatch"}});
        return rep;
    }
    for (std::size_t i = 0; i < rd.roots.size(); ++i)
        if (rd.roots[i].size() != rd.rank || rd.coroots[i].size() != rd.rank) {
            rep.fail({{"kind", "malformed"}, {"what", "vector dimension != rank"},
                      {"index", i}});
            return rep;
        }
    for (unsigned s : rd.simple_indices)
        if (s >= rd.roots.size()) {
            rep.fail({{"kind", "malformed"}, {"what", "simple index out of range"},
                      {"index", s}});
            return rep;
        }

    std::size_t n = rd.roots.size();
    for (std::size_t i = 0; i < n; ++i) {
        ++rep.trials;
        if (rd.pairing(i, i) != 2)
            rep.fail({{"kind", "axiom"}, {"what", "<alpha,alpha_vee> != 2"},
                      {"root", i},
                      {"pairing", static_cast<std::int64_t>(rd.pairing(i, i))}});
    }

    // reflections s_i permute the (root, coroot) pairs
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ++rep.trials;
            IntVec rimg = rd.roots[j];
            Int c = dot(rd.roots[j], rd.coroots[i]);
            for (unsigned k = 0; k < rd.rank; ++k) rimg[k] -= c * rd.roots[i][k];
            IntVec cimg = rd.coroots[j];
            Int d = dot(rd.roots[i], rd.coroots[j]);
            for (unsigned k = 0; k < rd.rank; ++k) cimg[k] -= d * rd.coroots[i][k];
            bool found = false;
            for (std::size_t t = 0; t < n; ++t)
                if (rd.roots[t] == rimg && rd.coroots[t] == cimg) { found = true; break; }
            if (!found)
                rep.fail({{"kind", "axiom"},
                          {"what", "reflection does not permute root/coroot pairs"},
                          {"reflection", i}, {"root", j}});
        }

    // simple roots form a base: every root is a nonneg or nonpos integer
    // combination of them
    std::vector<IntVec> simples;
    for (unsigned s : rd.simple_indices) simples.push_back(rd.roots[s]);
    for (std::size_t j = 0; j < n; ++j) {
        ++rep.trials;
        auto sol = solve_in_span(simples, rd.roots[j]);
        bool ok = false;
        if (sol) {
            bool integral = true, nonneg = true, nonpos = true;
            for (const auto& q : *sol) {
                if (denominator(q) != 1) integral = false;
                if (q < 0) nonneg = false;
                if (q > 0) nonpos = false;
            }
            ok = integral && (nonneg || nonpos);
        }
        if (!ok)
            rep.fail({{"kind", "axiom"},
                      {"what", "root is not a signed combination of simple roots"},
                      {"root", j}});
    }
    return rep;
}

bool is_derived_simply_connected(const RootDatum& rd) {
    if (rd.coroots.empty()) return true;
    IntMat m;
    for (const auto& cv : rd.coroots) m.push_back(cv);
    for (const auto& d : smith_normal_form(std::move(m)))
        if (d != 1) return false;
    return true;
}

std::pair<RootDatum, LatticeMorphism> z_extend(const RootDatum& rd) {
    if (!validate(rd).pass())
        throw std::invalid_argument("z_extend: input datum invalid");
    unsigned m = static_cast<unsigned>(rd.simple_indices.size());
    unsigned l = rd.rank;

    std::vector<IntVec> simple_coroots;
    for (unsigned s : rd.simple_indices) simple_coroots.push_back(rd.coroots[s]);

    RootDatum ext;
    ext.name = rd.name + "_zext";
    ext.rank = m + l;
    for (std::size_t j = 0; j < rd.roots.size(); ++j) {
        IntVec root(m + l, 0);
        for (unsigned k = 0; k < l; ++k) root[m + k] = rd.roots[j][k];
        // coroot in simple-coroot coordinates
        auto sol = solve_in_span(simple_coroots, rd.coroots[j]);
        if (!sol) throw std::logic_error("z_extend: coroot outside coroot lattice");
        IntVec coroot(m + l, 0);
        for (unsigned k = 0; k < m; ++k) {
            if (denominator((*sol)[k]) != 1)
                throw std::logic_error("z_extend: non-integral coroot coordinates");
            coroot[k] = numerator((*sol)[k]);
        }
        for (unsigned k = 0; k < l; ++k) coroot[m + k] = rd.coroots[j][k];
        ext.roots.push_back(std::move(root));
        ext.coroots.push_back(std::move(coroot));
    }
    ext.simple_indices = rd.simple_indices;

    LatticeMorphism proj;
    proj.source_rank = m + l;
    proj.target_rank = l;
    proj.matrix.assign(l, IntVec(m + l, 0));
    for (unsigned k = 0; k < l; ++k) proj.matrix[k][m + k] = 1;

    // postconditions
    if (!validate(ext).pass())
        throw std::logic_error("z_extend: output datum invalid");
    if (!is_derived_simply_connected(ext))
        throw std::logic_error("z_extend: derived group not simply connected");
    for (const auto& d : smith_normal_form(proj.matrix))
        if (d != 1) throw std::logic_error("z_extend: projection not surjective");
    for (std::size_t j = 0; j < rd.roots.size(); ++j) {
        if (proj.apply(ext.coroots[j]) != rd.coroots[j])
            throw std::logic_error("z_extend: coroot image mismatch");
        if (proj.pullback(rd.roots[j]) != ext.roots[j])
            throw std::logic_error("z_extend: root pullback mismatch");
    }
    return {std::move(ext), std::move(proj)};
}

std::optional<DatumIsomorphism> find_isomorphism(const RootDatum& rd1,
                                                 const RootDatum& rd2,
                                                 unsigned bound) {
    if (rd1.rank != rd2.rank) return std::nullopt;
    if (rd1.roots.size() != rd2.roots.size()) return std::nullopt;
    unsigned l = rd1.rank;
    std::size_t cells = static_cast<std::size_t>(l) * l;
    std::int64_t side = 2 * static_cast<std::int64_t>(bound) + 1;

    std::vector<std::int64_t> entries(cells, -static_cast<std::int64_t>(bound));
    auto advance = [&]() {
        for (std::size_t i = cells; i-- > 0;) {
            if (entries[i] < static_cast<std::int64_t>(bound)) { ++entries[i]; return true; }
            entries[i] = -static_cast<std::int64_t>(bound);
        }
        return false;
    };
    (void)side;

    do {
        IntMat p(l, IntVec(l));
        for (unsigned i = 0; i < l; ++i)
            for (unsigned j = 0; j < l; ++j) p[i][j] = entries[i * l + j];
        Int det = determinant(p);
        if (det != 1 && det != -1) continue;
        IntMat adj = adjugate(p);
        // inverse transpose of p: transpose(adjugate)/det
        IntMat q(l, IntVec(l));
        for (unsigned i = 0; i < l; ++i)
            for (unsigned j = 0; j < l; ++j) q[i][j] = adj[j][i] * det; // det = 1/det

        // match every (root, coroot) pair of rd1 to a pair of rd2
        bool ok = true;
        std::vector<bool> used(rd2.roots.size(), false);
        for (std::size_t a = 0; a < rd1.roots.size() && ok; ++a) {
            IntVec ci = mat_apply(p, rd1.coroots[a]);
            IntVec ri = mat_apply(q, rd1.roots[a]);
            bool found = false;
            for (std::size_t b = 0; b < rd2.roots.size(); ++b)
                if (!used[b] && rd2.coroots[b] == ci && rd2.roots[b] == ri) {
                    used[b] = true; found = true; break;
                }
            ok = found;
        }
        if (ok) return DatumIsomorphism{std::move(p), std::move(q)};
    } while (advance());
    return std::nullopt;
}

} // namespace frobsplit

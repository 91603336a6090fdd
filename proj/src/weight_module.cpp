#include "frobsplit/weight_module.hpp"

#include "frobsplit/compat.hpp"

#include <stdexcept>

namespace frobsplit {

Mat zero_mat(unsigned rows, unsigned cols) { return Mat(rows, IntVec(cols, 0)); }

Mat identity_mat(unsigned n) {
    Mat m = zero_mat(n, n);
    for (unsigned i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_product(const Mat& a, const Mat& b, const Ring& ring) {
    unsigned n = static_cast<unsigned>(a.size());
    unsigned k = static_cast<unsigned>(b.size());
    unsigned m = b.empty() ? 0 : static_cast<unsigned>(b[0].size());
    Mat out = zero_mat(n, m);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (unsigned j = 0; j < m; ++j)
                if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
        }
    for (auto& row : out)
        for (auto& v : row) v = ring.normalize(v);
    return out;
}

Mat mat_scaled(const Mat& a, const Int& c, const Ring& ring) {
    Mat out = a;
    for (auto& row : out)
        for (auto& v : row) v = ring.normalize(v * c);
    return out;
}

Mat mat_sum(const Mat& a, const Mat& b, const Ring& ring) {
    Mat out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out[i].size(); ++j)
            out[i][j] = ring.normalize(out[i][j] + b[i][j]);
    return out;
}

Mat kronecker(const Mat& a, const Mat& b, const Ring& ring) {
    unsigned ar = static_cast<unsigned>(a.size());
    unsigned ac = ar ? static_cast<unsigned>(a[0].size()) : 0;
    unsigned br = static_cast<unsigned>(b.size());
    unsigned bc = br ? static_cast<unsigned>(b[0].size()) : 0;
    Mat out = zero_mat(ar * br, ac * bc);
    for (unsigned i = 0; i < ar; ++i)
        for (unsigned j = 0; j < ac; ++j) {
            if (a[i][j] == 0) continue;
            for (unsigned u = 0; u < br; ++u)
                for (unsigned v = 0; v < bc; ++v)
                    out[i * br + u][j * bc + v] = ring.normalize(a[i][j] * b[u][v]);
        }
    return out;
}

Mat WeightModule::op_e(unsigned n) const {
    if (n <= n_max) return opE[n];
    return zero_mat(dim, dim);
}

Mat WeightModule::op_f(unsigned n) const {
    if (n <= n_max) return opF[n];
    return zero_mat(dim, dim);
}

Mat WeightModule::torus_op(const MultiIndex& b) const {
    Mat d = zero_mat(dim, dim);
    for (unsigned j = 0; j < dim; ++j) {
        Int v = 1;
        for (unsigned i = 0; i < ctx->rank; ++i) v *= binom(weights[j][i], b[i]);
        d[j][j] = ctx->ring.normalize(v);
    }
    return d;
}

Mat WeightModule::action(const PbwElement& x) const {
    if (!(*x.context() == *ctx))
        throw std::invalid_argument("WeightModule::action: context mismatch");
    Mat out = zero_mat(dim, dim);
    for (const auto& [k, c] : x.terms()) {
        Mat m = mat_product(op_f(k.f), mat_product(torus_op(k.b), op_e(k.e), ctx->ring),
                            ctx->ring);
        out = mat_sum(out, mat_scaled(m, c, ctx->ring), ctx->ring);
    }
    return out;
}

bool WeightModule::equal(const WeightModule& other) const {
    if (!(*ctx == *other.ctx) || dim != other.dim || weights != other.weights)
        return false;
    unsigned top = std::max(n_max, other.n_max);
    for (unsigned n = 0; n <= top; ++n)
        if (op_e(n) != other.op_e(n) || op_f(n) != other.op_f(n)) return false;
    return true;
}

nlohmann::json WeightModule::to_json() const {
    nlohmann::json j;
    j["context"] = ctx->datum.name;
    j["dim"] = dim;
    nlohmann::json w = nlohmann::json::array();
    for (const auto& lam : weights) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : lam) row.push_back(static_cast<std::int64_t>(x));
        w.push_back(row);
    }
    j["weights"] = w;
    auto dump_ops = [&](const std::vector<Mat>& ops) {
        nlohmann::json o = nlohmann::json::object();
        for (unsigned n = 1; n < ops.size(); ++n) {
            nlohmann::json mat = nlohmann::json::array();
            bool nonzero = false;
            for (const auto& row : ops[n]) {
                nlohmann::json r = nlohmann::json::array();
                for (const auto& v : row) {
                    r.push_back(v.str());
                    if (v != 0) nonzero = true;
                }
                mat.push_back(r);
            }
            if (nonzero) o[std::to_string(n)] = mat;
        }
        return o;
    };
    j["opE"] = dump_ops(opE);
    j["opF"] = dump_ops(opF);
    return j;
}

std::optional<IntVec> dominant_weight(const AlgebraContext& ctx, unsigned n) {
    // extended gcd across the coroot coordinates
    IntVec x(ctx.rank, 0);
    Int g = 0;
    for (unsigned i = 0; i < ctx.rank; ++i) {
        Int c = ctx.coroot_coeffs[i];
        if (c == 0) continue;
        if (g == 0) {
            g = abs(c);
            x[i] = c > 0 ? 1 : -1;
        } else {
            // g_new = gcd(g, c) = s*g + t*c
            Int old_r = g, r = abs(c), old_s = 1, s = 0;
            while (r != 0) {
                Int q = old_r / r;
                Int tmp = old_r - q * r; old_r = r; r = tmp;
                tmp = old_s - q * s; old_s = s; s = tmp;
            }
            Int t = (old_r - old_s * g) / abs(c);
            if (c < 0) t = -t;
            for (unsigned k = 0; k < i; ++k) x[k] *= old_s;
            x[i] = t;
            g = old_r;
        }
    }
    if (g == 0 || Int(n) % g != 0) return std::nullopt;
    Int scale = Int(n) / g;
    for (auto& v : x) v *= scale;
    return x;
}

WeightModule weyl_module(std::shared_ptr<const AlgebraContext> ctx, IntVec lambda) {
    Int pairing = dot(lambda, ctx->coroot_coeffs);
    if (pairing < 0)
        throw std::invalid_argument("weyl_module: non-dominant highest weight");
    auto n = static_cast<unsigned>(pairing);
    WeightModule m;
    m.ctx = ctx;
    m.dim = n + 1;
    m.n_max = n + 1;
    for (unsigned i = 0; i <= n; ++i) {
        IntVec w = lambda;
        for (unsigned k = 0; k < ctx->rank; ++k) w[k] -= Int(i) * ctx->alpha_on_H[k];
        m.weights.push_back(std::move(w));
    }
    m.opE.assign(m.n_max + 1, zero_mat(m.dim, m.dim));
    m.opF.assign(m.n_max + 1, zero_mat(m.dim, m.dim));
    m.opE[0] = identity_mat(m.dim);
    m.opF[0] = identity_mat(m.dim);
    for (unsigned r = 1; r <= m.n_max; ++r)
        for (unsigned i = 0; i <= n; ++i) {
            if (i + r <= n)
                m.opF[r][i + r][i] = ctx->ring.normalize(binom(Int(i) + r, r));
            if (i >= r)
                m.opE[r][i - r][i] = ctx->ring.normalize(binom(Int(n - i) + r, r));
        }
    return m;
}

VerificationReport validate_module(const WeightModule& m, unsigned relation_bound) {
    VerificationReport rep;
    rep.check = "validate_module";
    rep.parameters = {{"dim", m.dim}, {"n_max", m.n_max}};
    const auto& ctx = *m.ctx;
    unsigned bound = relation_bound ? relation_bound : std::min(m.n_max, m.dim + 1);
    rep.parameters["relation_bound"] = bound;

    // weight zero patterns: E^(n) maps lambda into lambda + n alpha
    for (unsigned n = 1; n <= m.n_max; ++n)
        for (unsigned i = 0; i < m.dim; ++i)
            for (unsigned j = 0; j < m.dim; ++j) {
                ++rep.trials;
                auto expect = [&](int sign) {
                    for (unsigned k = 0; k < ctx.rank; ++k)
                        if (m.weights[i][k] !=
                            m.weights[j][k] + sign * Int(n) * ctx.alpha_on_H[k])
                            return false;
                    return true;
                };
                if (m.opE[n][i][j] != 0 && !expect(+1))
                    rep.fail({{"relation", "weight_pattern_E"}, {"n", n},
                              {"row", i}, {"col", j}});
                if (m.opF[n][i][j] != 0 && !expect(-1))
                    rep.fail({{"relation", "weight_pattern_F"}, {"n", n},
                              {"row", i}, {"col", j}});
            }

    auto check_equal = [&](const Mat& a, const Mat& b, nlohmann::json where) {
        ++rep.trials;
        for (unsigned i = 0; i < m.dim; ++i)
            for (unsigned j = 0; j < m.dim; ++j)
                if (a[i][j] != b[i][j]) {
                    where["entry"] = {i, j};
                    rep.fail(where);
                    return;
                }
    };

    // divided powers
    for (unsigned a = 1; a <= bound; ++a)
        for (unsigned b = 1; a + b <= bound; ++b) {
            Int c = binom(Int(a) + b, a);
            check_equal(mat_product(m.op_f(a), m.op_f(b), ctx.ring),
                        mat_scaled(m.op_f(a + b), c, ctx.ring),
                        {{"relation", "divided_power_F"}, {"a", a}, {"b", b}});
            check_equal(mat_product(m.op_e(a), m.op_e(b), ctx.ring),
                        mat_scaled(m.op_e(a + b), c, ctx.ring),
                        {{"relation", "divided_power_E"}, {"a", a}, {"b", b}});
        }

    // E^(a) F^(b) commutation
    for (unsigned a = 1; a <= bound; ++a)
        for (unsigned b = 1; b <= bound; ++b) {
            Mat lhs = mat_product(m.op_e(a), m.op_f(b), ctx.ring);
            Mat rhs = zero_mat(m.dim, m.dim);
            for (unsigned r = 0; r <= std::min(a, b); ++r) {
                Mat d = zero_mat(m.dim, m.dim);
                for (unsigned j = 0; j < m.dim; ++j)
                    d[j][j] = ctx.ring.normalize(
                        binom(dot(m.weights[j], ctx.coroot_coeffs) + 2 * Int(r) - a - b, r));
                rhs = mat_sum(rhs,
                              mat_product(m.op_f(b - r),
                                          mat_product(d, m.op_e(a - r), ctx.ring),
                                          ctx.ring),
                              ctx.ring);
            }
            check_equal(lhs, rhs, {{"relation", "commutation"}, {"a", a}, {"b", b}});
        }
    return rep;
}

WeightModule frobenius_twist(const WeightModule& m) {
    const auto& ctx = *m.ctx;
    if (!ctx.ring.is_fp()) throw std::invalid_argument("frobenius_twist: F_p only");
    auto p = static_cast<unsigned>(ctx.ring.p);
    WeightModule out;
    out.ctx = m.ctx;
    out.dim = m.dim;
    for (const auto& w : m.weights) {
        IntVec pw = w;
        for (auto& v : pw) v *= p;
        out.weights.push_back(std::move(pw));
    }
    out.n_max = p * m.n_max;
    out.opE.assign(out.n_max + 1, zero_mat(m.dim, m.dim));
    out.opF.assign(out.n_max + 1, zero_mat(m.dim, m.dim));
    for (unsigned n = 0; n <= out.n_max; ++n)
        if (n % p == 0) {
            out.opE[n] = m.opE[n / p];
            out.opF[n] = m.opF[n / p];
        }
    return out;
}

WeightModule contract(const WeightModule& m) {
    const auto& ctx = *m.ctx;
    if (!ctx.ring.is_fp()) throw std::invalid_argument("contract: F_p only");
    auto p = static_cast<unsigned>(ctx.ring.p);
    std::vector<unsigned> keep;
    for (unsigned j = 0; j < m.dim; ++j) {
        bool divisible = true;
        for (const auto& v : m.weights[j])
            if (v % p != 0) { divisible = false; break; }
        if (divisible) keep.push_back(j);
    }
    WeightModule out;
    out.ctx = m.ctx;
    out.dim = static_cast<unsigned>(keep.size());
    for (unsigned j : keep) {
        IntVec w = m.weights[j];
        for (auto& v : w) v /= p;
        out.weights.push_back(std::move(w));
    }
    out.n_max = m.n_max / p;
    auto restrict_op = [&](const Mat& big) {
        Mat small = zero_mat(out.dim, out.dim);
        for (unsigned i = 0; i < out.dim; ++i)
            for (unsigned j = 0; j < out.dim; ++j)
                small[i][j] = big[keep[i]][keep[j]];
        return small;
    };
    out.opE.reserve(out.n_max + 1);
    out.opF.reserve(out.n_max + 1);
    for (unsigned n = 0; n <= out.n_max; ++n) {
        out.opE.push_back(restrict_op(m.op_e(p * n)));
        out.opF.push_back(restrict_op(m.op_f(p * n)));
    }
    return out;
}

WeightModule tensor(const WeightModule& a, const WeightModule& b) {
    if (!(*a.ctx == *b.ctx)) throw std::invalid_argument("tensor: context mismatch");
    const Ring& ring = a.ctx->ring;
    WeightModule out;
    out.ctx = a.ctx;
    out.dim = a.dim * b.dim;
    for (unsigned i = 0; i < a.dim; ++i)
        for (unsigned j = 0; j < b.dim; ++j) {
            IntVec w = a.weights[i];
            for (unsigned k = 0; k < w.size(); ++k) w[k] += b.weights[j][k];
            out.weights.push_back(std::move(w));
        }
    out.n_max = a.n_max + b.n_max;
    out.opE.reserve(out.n_max + 1);
    out.opF.reserve(out.n_max + 1);
    for (unsigned n = 0; n <= out.n_max; ++n) {
        Mat e = zero_mat(out.dim, out.dim), f = zero_mat(out.dim, out.dim);
        for (unsigned u = 0; u <= n; ++u) {
            e = mat_sum(e, kronecker(a.op_e(u), b.op_e(n - u), ring), ring);
            f = mat_sum(f, kronecker(a.op_f(u), b.op_f(n - u), ring), ring);
        }
        out.opE.push_back(std::move(e));
        out.opF.push_back(std::move(f));
    }
    return out;
}

WeightModule direct_sum(const WeightModule& a, const WeightModule& b) {
    if (!(*a.ctx == *b.ctx)) throw std::invalid_argument("direct_sum: context mismatch");
    WeightModule out;
    out.ctx = a.ctx;
    out.dim = a.dim + b.dim;
    out.weights = a.weights;
    out.weights.insert(out.weights.end(), b.weights.begin(), b.weights.end());
    out.n_max = std::max(a.n_max, b.n_max);
    auto block = [&](const Mat& x, const Mat& y) {
        Mat m = zero_mat(out.dim, out.dim);
        for (unsigned i = 0; i < a.dim; ++i)
            for (unsigned j = 0; j < a.dim; ++j) m[i][j] = x[i][j];
        for (unsigned i = 0; i < b.dim; ++i)
            for (unsigned j = 0; j < b.dim; ++j) m[a.dim + i][a.dim + j] = y[i][j];
        return m;
    };
    for (unsigned n = 0; n <= out.n_max; ++n) {
        out.opE.push_back(block(a.op_e(n), b.op_e(n)));
        out.opF.push_back(block(a.op_f(n), b.op_f(n)));
    }
    return out;
}

WeightModule k_invariants(const WeightModule& m, const TorusProjection& proj,
                          std::shared_ptr<const AlgebraContext> target_ctx) {
    if (m.ctx->rank != proj.source_rank || target_ctx->rank != proj.target_rank)
        throw std::invalid_argument("k_invariants: rank mismatch");
    std::vector<unsigned> keep;
    for (unsigned j = 0; j < m.dim; ++j) {
        bool invariant = true;
        for (unsigned k = 0; k < proj.source_rank; ++k)
            if (proj.killed[k] && m.weights[j][k] != 0) { invariant = false; break; }
        if (invariant) keep.push_back(j);
    }
    WeightModule out;
    out.ctx = std::move(target_ctx);
    out.dim = static_cast<unsigned>(keep.size());
    for (unsigned j : keep) {
        IntVec w(proj.target_rank, 0);
        for (unsigned k = 0; k < proj.source_rank; ++k)
            if (!proj.killed[k]) w[proj.keep_map[k]] = m.weights[j][k];
        out.weights.push_back(std::move(w));
    }
    out.n_max = m.n_max;
    auto restrict_op = [&](const Mat& big) {
        Mat small = zero_mat(out.dim, out.dim);
        for (unsigned i = 0; i < out.dim; ++i)
            for (unsigned j = 0; j < out.dim; ++j)
                small[i][j] = big[keep[i]][keep[j]];
        return small;
    };
    for (unsigned n = 0; n <= out.n_max; ++n) {
        out.opE.push_back(restrict_op(m.op_e(n)));
        out.opF.push_back(restrict_op(m.op_f(n)));
    }
    return out;
}

namespace {

// Nullspace basis over F_p by Gaussian elimination; columns = module basis.
std::vector<IntVec> nullspace_mod_p(Mat a, unsigned cols, std::int64_t p) {
    std::size_t rows = a.size();
    for (auto& row : a)
        for (auto& v : row) {
            v %= p;
            if (v < 0) v += p;
        }
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (unsigned col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && a[pr][col] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[rank], a[pr]);
        // scale pivot row to 1
        Int inv = 1, base = a[rank][col];
        for (std::int64_t e = 1; e < p - 1; ++e) inv = inv * base % p; // base^(p-2)
        for (auto& v : a[rank]) v = v * inv % p;
        for (std::size_t i = 0; i < rows; ++i)
            if (i != rank && a[i][col] != 0) {
                Int f = a[i][col];
                for (unsigned j = 0; j < cols; ++j) {
                    a[i][j] = (a[i][j] - f * a[rank][j]) % p;
                    if (a[i][j] < 0) a[i][j] += p;
                }
            }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<IntVec> basis;
    for (unsigned col = 0; col < cols; ++col) {
        if (pivot_of_col[col] != -1) continue;
        IntVec v(cols, 0);
        v[col] = 1;
        for (unsigned c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] != -1) {
                Int val = (p - a[pivot_of_col[c2]][col] % p) % p;
                v[c2] = val;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<IntVec> g1_invariants(const WeightModule& m) {
    const auto& ctx = *m.ctx;
    if (!ctx.ring.is_fp()) throw std::invalid_argument("g1_invariants: F_p only");
    auto p = ctx.ring.p;
    Mat stacked;
    // weight-divisibility constraint: coordinates at bad weights must vanish
    for (unsigned j = 0; j < m.dim; ++j) {
        bool divisible = true;
        for (const auto& v : m.weights[j])
            if (v % p != 0) { divisible = false; break; }
        if (!divisible) {
            IntVec row(m.dim, 0);
            row[j] = 1;
            stacked.push_back(std::move(row));
        }
    }
    for (unsigned i = 1; i < static_cast<unsigned>(p); ++i) {
        for (const auto& row : m.op_e(i)) stacked.push_back(row);
        for (const auto& row : m.op_f(i)) stacked.push_back(row);
    }
    return nullspace_mod_p(std::move(stacked), m.dim, p);
}

} // namespace frobsplit

#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "reldom/module.hpp"
#include "reldom/poly.hpp"

namespace reldom {

template <class F>
struct DecompFactor {
    ModPtr<F> module;  // representative of the isomorphism class
    int multiplicity = 0;
    // per copy: (inclusion representative -> total, projection total -> representative)
    std::vector<std::pair<ModuleMap<F>, ModuleMap<F>>> copies;
};

template <class F>
struct Decomposition {
    ModPtr<F> total;
    std::vector<DecompFactor<F>> factors;
    int num_indec() const {
        int n = 0;
        for (const auto& f : factors) n += f.multiplicity;
        return n;
    }
};

namespace detail {

template <class F>
bool poly_is_power_of_x(const F& f, const Poly<F>& p) {
    for (int i = 0; i < p.deg(); ++i)
        if (!f.is_zero(p.c[i])) return false;
    return true;
}

// evaluate a polynomial at an endomorphism, blockwise
template <class F>
ModuleMap<F> poly_eval_endo(const Poly<F>& p, const ModuleMap<F>& e) {
    std::vector<Matrix<F>> b;
    for (const auto& blk : e.b) b.push_back(poly_eval_matrix(p, blk));
    return {e.src, e.dst, std::move(b)};
}

template <class F>
Poly<F> endo_min_poly(const ModuleMap<F>& e) {
    // minimal polynomial of the full matrix; computed on the concatenated blocks
    return minimal_polynomial(e.full());
}

template <class F>
ModuleMap<F> random_endo(const std::vector<ModuleMap<F>>& basis, std::mt19937_64& rng) {
    const F& f = basis[0].src->field();
    auto acc = zero_map(basis[0].src, basis[0].dst);
    for (const auto& e : basis) {
        long c;
        if constexpr (std::is_same_v<F, FieldGF>)
            c = static_cast<long>(rng() % f.p);
        else
            c = static_cast<long>(rng() % 7) - 3;
        if (c != 0) acc = map_add(acc, map_scale(e, f.from_long(c)));
    }
    return acc;
}

// split a module along a coprime factorization of the minimal polynomial of
// an endomorphism: M = ker a(e) (+) ker b(e)
template <class F>
std::optional<std::pair<SubmoduleResult<F>, SubmoduleResult<F>>> try_split(
    const ModPtr<F>& m, const ModuleMap<F>& endo, std::uint64_t seed) {
    const F& f = m->field();
    auto mp = endo_min_poly(endo);
    if (mp.deg() < 2) return std::nullopt;
    auto parts = coprime_split(f, mp, seed);
    if (!parts) return std::nullopt;
    auto ea = poly_eval_endo(parts->first, endo);
    auto eb = poly_eval_endo(parts->second, endo);
    int nv = m->algebra()->nvert();
    std::vector<Matrix<F>> ka, kb;
    for (int v = 0; v < nv; ++v) {
        ka.push_back(kernel_basis(ea.b[v]));
        kb.push_back(kernel_basis(eb.b[v]));
    }
    auto sa = submodule_from_vertex_spans(m, ka);
    auto sb = submodule_from_vertex_spans(m, kb);
    if (sa.module->total_dim() == 0 || sb.module->total_dim() == 0) return std::nullopt;
    if (sa.module->total_dim() + sb.module->total_dim() != m->total_dim()) return std::nullopt;
    return std::make_pair(std::move(sa), std::move(sb));
}

// projections of M onto the two summands given their inclusions
template <class F>
std::pair<ModuleMap<F>, ModuleMap<F>> split_projections(const ModPtr<F>& m,
                                                        const SubmoduleResult<F>& a,
                                                        const SubmoduleResult<F>& b) {
    const F& f = m->field();
    int nv = m->algebra()->nvert();
    std::vector<Matrix<F>> pa(nv, Matrix<F>(f, 0, 0)), pb(nv, Matrix<F>(f, 0, 0));
    for (int v = 0; v < nv; ++v) {
        auto joint = a.inclusion.b[v].hstack(b.inclusion.b[v]);
        auto inv = inverse(joint);
        if (!inv) throw input_error("internal: split basis not invertible");
        Matrix<F> top(f, a.module->dim(v), m->dim(v));
        Matrix<F> bot(f, b.module->dim(v), m->dim(v));
        for (int j = 0; j < m->dim(v); ++j) {
            for (int i = 0; i < a.module->dim(v); ++i) top.at(i, j) = inv->at(i, j);
            for (int i = 0; i < b.module->dim(v); ++i)
                bot.at(i, j) = inv->at(a.module->dim(v) + i, j);
        }
        pa[v] = std::move(top);
        pb[v] = std::move(bot);
    }
    return {{m, a.module, std::move(pa)}, {m, b.module, std::move(pb)}};
}

// Over QQ (only): lift an idempotent from End/rad and split with it. The
// generic version declines; a specialization below implements the lift.
template <class F>
std::optional<ModuleMap<F>> qq_idempotent_lift(const ModPtr<F>&, const std::vector<ModuleMap<F>>&,
                                               std::uint64_t) {
    return std::nullopt;
}

template <>
std::optional<ModuleMap<FieldQQ>> qq_idempotent_lift(const ModPtr<FieldQQ>& m,
                                                     const std::vector<ModuleMap<FieldQQ>>& basis,
                                                     std::uint64_t seed);

}  // namespace detail

template <class F>
std::shared_ptr<Algebra<F>> end_algebra_of_basis(const ModPtr<F>& m,
                                                 const std::vector<ModuleMap<F>>& basis,
                                                 const std::string& nm);

// local-ring certificate per the documented test: every basis endomorphism is
// nilpotent or invertible, and the non-invertible ones span a subspace closed
// under multiplication by the full basis.
template <class F>
bool end_ring_is_local(const ModPtr<F>& m, const std::vector<ModuleMap<F>>& basis) {
    const F& f = m->field();
    std::vector<ModuleMap<F>> nil;
    for (const auto& e : basis) {
        auto mp = detail::endo_min_poly(e);
        bool invertible = mp.deg() >= 0 && !f.is_zero(mp.c[0]);
        bool nilpotent = detail::poly_is_power_of_x(f, mp);
        if (!invertible && !nilpotent) return false;
        if (!invertible) nil.push_back(e);
    }
    if (nil.empty()) return true;
    Matrix<F> span(f, nil[0].flatten().rows(), 0);
    for (const auto& e : nil) span = span.hstack(e.flatten());
    for (const auto& e : nil)
        for (const auto& g : basis) {
            if (!solve(span, compose(g, e).flatten())) return false;
            if (!solve(span, compose(e, g).flatten())) return false;
        }
    return true;
}

template <class F>
Decomposition<F> decompose(const ModPtr<F>& m, std::uint64_t seed = 0);

namespace detail {

// recursive splitter: pieces are submodules carried with maps into the root
template <class F>
void decompose_rec(const ModPtr<F>& root, const ModPtr<F>& piece, const ModuleMap<F>& inc,
                   const ModuleMap<F>& proj, std::uint64_t seed,
                   std::vector<std::pair<ModuleMap<F>, ModuleMap<F>>>& out) {
    if (piece->total_dim() == 0) return;
    auto basis = hom_space(piece, piece);
    auto recurse = [&](const SubmoduleResult<F>& a, const SubmoduleResult<F>& b) {
        auto [pa, pb] = split_projections(piece, a, b);
        decompose_rec(root, a.module, compose(inc, a.inclusion), compose(pa, proj), seed * 2 + 1,
                      out);
        decompose_rec(root, b.module, compose(inc, b.inclusion), compose(pb, proj), seed * 2 + 2,
                      out);
    };
    if (basis.size() > 1) {
        // candidate endomorphisms: basis, pairwise products, random combinations
        std::vector<ModuleMap<F>> cands = basis;
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) cands.push_back(compose(basis[i], basis[j]));
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
        for (int t = 0; t < 24; ++t) cands.push_back(random_endo(basis, rng));
        for (const auto& e : cands) {
            auto split = try_split(piece, e, seed);
            if (split) {
                recurse(split->first, split->second);
                return;
            }
        }
        if (!end_ring_is_local(piece, basis)) {
            auto idem = qq_idempotent_lift(piece, basis, seed);
            if (idem) {
                int nv = piece->algebra()->nvert();
                std::vector<Matrix<F>> im, ker;
                for (int v = 0; v < nv; ++v) {
                    im.push_back(image_basis(idem->b[v]));
                    ker.push_back(kernel_basis(idem->b[v]));
                }
                auto sa = submodule_from_vertex_spans(piece, im);
                auto sb = submodule_from_vertex_spans(piece, ker);
                if (sa.module->total_dim() > 0 && sb.module->total_dim() > 0 &&
                    sa.module->total_dim() + sb.module->total_dim() == piece->total_dim()) {
                    recurse(sa, sb);
                    return;
                }
            }
            throw decompose_error(
                "decomposition unavailable; supply a candidate decomposition (endomorphism ring "
                "did not certify local and no splitting was found)");
        }
    }
    out.push_back({inc, proj});
}

}  // namespace detail

// explicit isomorphism between (presumed indecomposable) modules: some basis
// element of Hom is invertible iff they are isomorphic
template <class F>
std::optional<ModuleMap<F>> indec_iso(const ModPtr<F>& a, const ModPtr<F>& b) {
    if (a->dims() != b->dims()) return std::nullopt;
    for (auto& h : hom_space(a, b))
        if (h.is_iso()) return h;
    return std::nullopt;
}

template <class F>
Decomposition<F> decompose(const ModPtr<F>& m, std::uint64_t seed) {
    auto& cache = caches_of(*m->algebra()).decomp;
    std::string ck = m->key() + "@" + std::to_string(seed);
    if (auto it = cache.find(ck); it != cache.end()) return *it->second;

    std::vector<std::pair<ModuleMap<F>, ModuleMap<F>>> pieces;
    detail::decompose_rec(m, m, identity_map(m), identity_map(m), seed + 1, pieces);

    Decomposition<F> d;
    d.total = m;
    for (auto& [inc, proj] : pieces) {
        bool placed = false;
        for (auto& fac : d.factors) {
            auto iso = indec_iso(fac.module, inc.src);
            if (iso) {
                // transport so every copy's maps use the representative
                auto isoinv_blocks = std::vector<Matrix<F>>();
                for (const auto& blk : iso->b) {
                    auto inv = inverse(blk);
                    if (!inv) throw input_error("internal: iso not invertible");
                    isoinv_blocks.push_back(std::move(*inv));
                }
                ModuleMap<F> isoinv{inc.src, fac.module, std::move(isoinv_blocks)};
                fac.copies.push_back({compose(inc, *iso), compose(isoinv, proj)});
                fac.multiplicity++;
                placed = true;
                break;
            }
        }
        if (!placed) d.factors.push_back({inc.src, 1, {{inc, proj}}});
    }
    std::sort(d.factors.begin(), d.factors.end(), [](const auto& x, const auto& y) {
        if (x.module->total_dim() != y.module->total_dim())
            return x.module->total_dim() < y.module->total_dim();
        if (x.module->dims() != y.module->dims()) return x.module->dims() < y.module->dims();
        return x.module->key() < y.module->key();
    });
    cache[ck] = std::make_shared<const Decomposition<F>>(d);
    return d;
}

// isomorphism test for arbitrary modules: match indecomposable factors
template <class F>
std::optional<ModuleMap<F>> find_iso(const ModPtr<F>& a, const ModPtr<F>& b,
                                     std::uint64_t seed = 0) {
    if (!same_algebra(a->algebra(), b->algebra())) return std::nullopt;
    if (a->dims() != b->dims()) return std::nullopt;
    if (a->total_dim() == 0) return zero_map(a, b);
    if (auto direct = indec_iso(a, b)) return direct;
    auto da = decompose(a, seed);
    auto db = decompose(b, seed);
    if (da.factors.size() != db.factors.size()) return std::nullopt;
    auto iso = zero_map(a, b);
    std::vector<bool> used(db.factors.size(), false);
    for (const auto& fa : da.factors) {
        bool matched = false;
        for (size_t j = 0; j < db.factors.size(); ++j) {
            if (used[j] || db.factors[j].multiplicity != fa.multiplicity) continue;
            auto theta = indec_iso(fa.module, db.factors[j].module);
            if (!theta) continue;
            used[j] = true;
            matched = true;
            for (int c = 0; c < fa.multiplicity; ++c) {
                // b_inc . theta . a_proj summed over copies
                auto term = compose(db.factors[j].copies[c].first,
                                    compose(*theta, fa.copies[c].second));
                iso = map_add(iso, term);
            }
            break;
        }
        if (!matched) return std::nullopt;
    }
    if (!iso.is_iso()) return std::nullopt;
    return iso;
}

template <class F>
bool modules_isomorphic(const ModPtr<F>& a, const ModPtr<F>& b, std::uint64_t seed = 0) {
    return find_iso(a, b, seed).has_value();
}

// basic version of a module: one copy of each indecomposable summand
template <class F>
ModPtr<F> basic_module(const ModPtr<F>& m, std::uint64_t seed = 0) {
    auto d = decompose(m, seed);
    std::vector<ModPtr<F>> parts;
    for (const auto& f : d.factors) parts.push_back(f.module);
    std::string nm = m->name().empty() ? "" : "basic(" + m->name() + ")";
    return direct_sum(m->algebra(), parts, nm).module;
}

// ---------------------------------------------------------------------------
// add-membership via the trace-ideal test
// ---------------------------------------------------------------------------

template <class F>
struct AddMembership {
    bool member = false;
    // certificate: id_x = sum of coeff * f_i . g_j, f: t->x, g: x->t
    std::vector<std::tuple<typename F::Elt, ModuleMap<F>, ModuleMap<F>>> terms;
};

template <class F>
AddMembership<F> add_membership_certified(const ModPtr<F>& x, const ModPtr<F>& t) {
    if (!same_algebra(x->algebra(), t->algebra()))
        throw input_error("add_membership: modules over different algebras");
    const F& f = x->field();
    AddMembership<F> out;
    if (x->total_dim() == 0) {
        out.member = true;
        return out;
    }
    auto from = hom_space(t, x);
    auto to = hom_space(x, t);
    if (from.empty() || to.empty()) return out;
    auto id = identity_map(x);
    int n = id.flatten().rows();
    Matrix<F> cols(f, n, 0);
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < from.size(); ++i)
        for (size_t j = 0; j < to.size(); ++j) {
            cols = cols.hstack(compose(from[i], to[j]).flatten());
            pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    auto sol = solve(cols, id.flatten());
    if (!sol) return out;
    out.member = true;
    for (size_t k = 0; k < pairs.size(); ++k) {
        const auto& c = sol->at(static_cast<int>(k), 0);
        if (!f.is_zero(c)) out.terms.push_back({c, from[pairs[k].first], to[pairs[k].second]});
    }
    return out;
}

template <class F>
bool add_membership(const ModPtr<F>& x, const ModPtr<F>& t) {
    return add_membership_certified(x, t).member;
}

// ---------------------------------------------------------------------------
// endomorphism algebras
// ---------------------------------------------------------------------------

template <class F>
std::shared_ptr<Algebra<F>> end_algebra_of_basis(const ModPtr<F>& m,
                                                 const std::vector<ModuleMap<F>>& basis,
                                                 const std::string& nm) {
    const F& f = m->field();
    int r = static_cast<int>(basis.size());
    Matrix<F> cols(f, r ? basis[0].flatten().rows() : m->total_dim() * m->total_dim(), 0);
    for (const auto& e : basis) cols = cols.hstack(e.flatten());
    std::vector<std::vector<SparseVec<F>>> mult(r, std::vector<SparseVec<F>>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            auto prod = compose(basis[i], basis[j]);
            auto c = solve(cols, prod.flatten());
            if (!c) throw input_error("internal: End not closed under composition");
            for (int k = 0; k < r; ++k)
                if (!f.is_zero(c->at(k, 0))) mult[i][j].push_back({k, c->at(k, 0)});
        }
    auto idc = solve(cols, identity_map(m).flatten());
    if (!idc) throw input_error("internal: identity outside End span");
    SparseVec<F> unit;
    for (int k = 0; k < r; ++k)
        if (!f.is_zero(idc->at(k, 0))) unit.push_back({k, idc->at(k, 0)});
    std::vector<std::string> labels;
    for (int k = 0; k < r; ++k) labels.push_back("f" + std::to_string(k));
    return make_abstract_algebra(f, nm, r, std::move(labels), std::move(mult), std::move(unit));
}

template <class F>
struct EndAlgebra {
    std::vector<ModuleMap<F>> basis;     // endomorphisms
    std::shared_ptr<Algebra<F>> alg;     // End(M)
    AlgPtr<F> op;                        // End(M)^op
};

template <class F>
EndAlgebra<F> end_algebra_of(const ModPtr<F>& m) {
    EndAlgebra<F> out;
    out.basis = hom_space(m, m);
    std::string nm = "End(" + (m->name().empty() ? std::string("M") : m->name()) + ")";
    out.alg = end_algebra_of_basis(m, out.basis, nm);
    out.op = opposite_algebra(AlgPtr<F>(out.alg));
    return out;
}

namespace detail {

// idempotent lifting over QQ: find an idempotent of End/rad with a rational
// eigenvalue argument, lift it Newton-style, and hand it back as a matrix.
template <>
inline std::optional<ModuleMap<FieldQQ>> qq_idempotent_lift<FieldQQ>(
    const ModPtr<FieldQQ>& m, const std::vector<ModuleMap<FieldQQ>>& basis, std::uint64_t seed) {
    using F = FieldQQ;
    const F f;
    if (basis.size() < 2) return std::nullopt;
    auto alg = end_algebra_of_basis(m, basis, "E");
    AlgPtr<F> aptr = alg;
    auto rad = algebra_radical(aptr);  // trace-form kernel: valid in char 0
    if (rad.cols() == 0) return std::nullopt;
    int n = alg->dim;
    // quotient S = E/rad with section
    Matrix<F> radT = rad.transpose();
    auto rr = rref(radT);
    std::vector<bool> piv(n, false);
    for (int p : rr.pivots) piv[p] = true;
    std::vector<int> freec;
    for (int j = 0; j < n; ++j)
        if (!piv[j]) freec.push_back(j);
    int q = static_cast<int>(freec.size());
    if (q == 0) return std::nullopt;
    Matrix<F> P(f, q, n), S(f, n, q);
    for (int t = 0; t < q; ++t) {
        P.at(t, freec[t]) = f.one();
        for (int i = 0; i < rr.rank; ++i) {
            const auto& u = rr.mat.at(i, freec[t]);
            if (!f.is_zero(u)) P.at(t, rr.pivots[i]) = f.neg(u);
        }
        S.at(freec[t], t) = f.one();
    }
    // left multiplication on S
    auto lmul_S = [&](const Matrix<F>& coeffs_q) {  // element of S as q-vector
        Matrix<F> L(f, q, q);
        auto lift = S.mul(coeffs_q);
        std::vector<typename F::Elt> x(n);
        for (int i = 0; i < n; ++i) x[i] = lift.at(i, 0);
        for (int j = 0; j < q; ++j) {
            std::vector<typename F::Elt> y(n, f.zero());
            y[freec[j]] = f.one();
            auto prod = alg->multiply(x, y);
            Matrix<F> pv(f, n, 1);
            for (int i = 0; i < n; ++i) pv.at(i, 0) = prod[i];
            auto down = P.mul(pv);
            for (int i = 0; i < q; ++i) L.at(i, j) = down.at(i, 0);
        }
        return L;
    };
    std::mt19937_64 rng(seed ^ 0xabcdef123ull);
    std::vector<Matrix<F>> cands;
    for (int j = 0; j < q; ++j) {
        Matrix<F> v(f, q, 1);
        v.at(j, 0) = f.one();
        cands.push_back(v);
    }
    for (int t = 0; t < 16; ++t) {
        Matrix<F> v(f, q, 1);
        for (int j = 0; j < q; ++j) v.at(j, 0) = f.from_long(static_cast<long>(rng() % 7) - 3);
        cands.push_back(v);
    }
    for (const auto& v : cands) {
        auto L = lmul_S(v);
        auto mp = minimal_polynomial(L);
        auto parts = coprime_split(f, mp, seed);
        if (!parts) continue;
        // e = g(s)/g(lambda_part)...: build the idempotent via CRT: pick the
        // first part p1; the idempotent is h(s) with h = 1 mod p1, 0 mod p2.
        // Compute h via extended euclid: a*p1 + b*p2 = 1  ->  h = b*p2.
        auto [p1, p2] = *parts;
        // extended euclid on polys
        Poly<F> r0 = p1, r1 = p2;
        Poly<F> s0{{f.one()}}, s1;
        Poly<F> t0, t1{{f.one()}};
        while (!r1.is_zero()) {
            auto [qd, rm] = poly_divmod(f, r0, r1);
            auto s2 = poly_sub(f, s0, poly_mul(f, qd, s1));
            auto t2 = poly_sub(f, t0, poly_mul(f, qd, t1));
            r0 = r1;
            r1 = rm;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if (r0.deg() != 0) continue;
        auto scale = f.inv(r0.c[0]);
        for (auto& cc : t0.c) cc = f.mul(cc, scale);
        auto h = poly_mul(f, t0, p2);  // h = 1 mod p1, 0 mod p2
        // idempotent in S: h(L) applied to unit of S... evaluate on the element:
        // e = h(s) where s is the chosen element; compute via L acting on unit coords
        Matrix<F> unitS(f, q, 1);
        {
            std::vector<typename F::Elt> u(n, f.zero());
            for (const auto& [k, c] : alg->unit) u[k] = c;
            Matrix<F> uv(f, n, 1);
            for (int i = 0; i < n; ++i) uv.at(i, 0) = u[i];
            unitS = P.mul(uv);
        }
        auto hM = poly_eval_matrix(h, L);
        auto eS = hM.mul(unitS);
        // reject trivial idempotents
        bool zero = true, unit_like = true;
        for (int i = 0; i < q; ++i) {
            if (!f.is_zero(eS.at(i, 0))) zero = false;
            if (!f.eq(eS.at(i, 0), unitS.at(i, 0))) unit_like = false;
        }
        if (zero || unit_like) continue;
        // lift to E and Newton-iterate within End(M) as matrices
        auto lifted = S.mul(eS);
        auto endo = zero_map(m, m);
        for (int i = 0; i < n; ++i)
            if (!f.is_zero(lifted.at(i, 0))) endo = map_add(endo, map_scale(basis[i], lifted.at(i, 0)));
        for (int it = 0; it < 12; ++it) {
            auto e2 = compose(endo, endo);
            auto diff = map_add(e2, map_scale(endo, f.from_long(-1)));
            if (diff.is_zero()) break;
            // e <- 3e^2 - 2e^3
            auto e3 = compose(e2, endo);
            endo = map_add(map_scale(e2, f.from_long(3)), map_scale(e3, f.from_long(-2)));
        }
        auto e2 = compose(endo, endo);
        if (!map_add(e2, map_scale(endo, f.from_long(-1))).is_zero()) continue;
        if (endo.is_zero()) continue;
        auto co = map_add(identity_map(m), map_scale(endo, f.from_long(-1)));
        if (co.is_zero()) continue;
        return endo;
    }
    return std::nullopt;
}

}  // namespace detail

}  // namespace reldom

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reldom/decompose.hpp"
#include "reldom/dimvalue.hpp"
#include "reldom/module.hpp"

namespace reldom {

// A (co)resolution. Projective: ... -> terms[1] -> terms[0] -> start -> 0
// with maps[0] the augmentation terms[0] -> start and maps[i]: terms[i] ->
// terms[i-1]. Injective: 0 -> start -> terms[0] -> terms[1] -> ... with
// maps[0]: start -> terms[0] and maps[i]: terms[i-1] -> terms[i].
template <class F>
struct Resolution {
    bool projective = true;
    ModPtr<F> start;
    std::vector<ModPtr<F>> terms;
    std::vector<ModuleMap<F>> maps;
    std::vector<ModPtr<F>> syzygies;      // kernels (resp. cokernels) per step
    std::vector<ModuleMap<F>> syz_inc;    // inclusion of each syzygy into its term
    // multiset of standard labels per term: (vertex, multiplicity); empty for
    // terms over abstract algebras
    std::vector<std::vector<std::pair<int, int>>> content;
    bool complete = false;
    std::optional<std::pair<int, int>> repeat;  // syzygies i ~ j (0-based), i < j
    bool minimal = true;

    int depth() const { return static_cast<int>(terms.size()); }
};

namespace detail {

template <class F>
struct CoverStep {
    ModPtr<F> cover;
    ModuleMap<F> onto;  // cover -> m, surjective
    std::vector<std::pair<int, int>> content;
};

// minimal projective cover over a bound quiver algebra: projective on top(M)
template <class F>
CoverStep<F> projective_cover_quiver(const ModPtr<F>& m) {
    const auto& alg = *m->algebra();
    const F& f = m->field();
    int nv = alg.nvert();
    // radical span per vertex
    std::vector<Matrix<F>> rad(nv, Matrix<F>(f, 0, 0));
    for (int v = 0; v < nv; ++v) rad[v] = Matrix<F>(f, m->dim(v), 0);
    for (size_t g = 0; g < alg.gens.size(); ++g)
        rad[alg.gens[g].tgt] = rad[alg.gens[g].tgt].hstack(m->block(static_cast<int>(g)));
    // top representatives: free coordinates of the radical quotient
    std::vector<std::vector<int>> reps(nv);
    for (int v = 0; v < nv; ++v) {
        auto rr = rref(rad[v].transpose());
        std::vector<bool> piv(m->dim(v), false);
        for (int p : rr.pivots) piv[p] = true;
        for (int j = 0; j < m->dim(v); ++j)
            if (!piv[j]) reps[v].push_back(j);
    }
    std::vector<ModPtr<F>> parts;
    std::vector<std::pair<int, int>> content;
    std::vector<std::pair<int, int>> copy_of;  // (vertex, coordinate)
    for (int v = 0; v < nv; ++v) {
        if (reps[v].empty()) continue;
        content.push_back({v, static_cast<int>(reps[v].size())});
        for (int r : reps[v]) {
            parts.push_back(standard_projective(m->algebra(), v));
            copy_of.push_back({v, r});
        }
    }
    auto sum = direct_sum(m->algebra(), parts);
    // assemble the map copy by copy: P(v) -> m, e_v |-> representative
    std::vector<std::vector<std::vector<int>>> vertex_paths_cache(nv);
    auto vertex_paths = [&](int v) -> const std::vector<std::vector<int>>& {
        if (vertex_paths_cache[v].empty()) {
            vertex_paths_cache[v].assign(nv, {});
            for (int i = 0; i < alg.dim; ++i)
                if (alg.src[i] == v) vertex_paths_cache[v][alg.tgt[i]].push_back(i);
        }
        return vertex_paths_cache[v];
    };
    std::vector<Matrix<F>> blocks;
    for (int w = 0; w < nv; ++w) blocks.push_back(Matrix<F>(f, m->dim(w), sum.module->dim(w)));
    std::vector<int> at(nv, 0);
    for (size_t c = 0; c < parts.size(); ++c) {
        auto [v, rep] = copy_of[c];
        const auto& vp = vertex_paths(v);
        for (int w = 0; w < nv; ++w) {
            for (size_t k = 0; k < vp[w].size(); ++k) {
                auto colmat = m->action_block(vp[w][k]);  // m_v -> m_w
                for (int i = 0; i < m->dim(w); ++i)
                    blocks[w].at(i, at[w] + static_cast<int>(k)) = colmat.at(i, rep);
            }
            at[w] += parts[c]->dim(w);
        }
    }
    ModuleMap<F> onto{sum.module, m, std::move(blocks)};
    return {sum.module, std::move(onto), std::move(content)};
}

// projective cover over an abstract algebra: free module on a greedy
// generating set, decomposed, then summand copies dropped while the map
// stays surjective (a drop-stable surjection from a projective is a cover)
template <class F>
CoverStep<F> projective_cover_abstract(const ModPtr<F>& m) {
    const auto& algp = m->algebra();
    const F& f = m->field();
    int n = m->total_dim();
    auto reg = regular_module(algp);
    auto regdec = decompose(reg, 0);
    // greedy generating set
    std::vector<Matrix<F>> genvecs;
    Matrix<F> span(f, n, 0);
    auto closure = [&](Matrix<F> s) {
        while (true) {
            auto grown = s;
            for (int g = 0; g < static_cast<int>(algp->gens.size()); ++g)
                grown = grown.hstack(m->block(g).mul(s));
            grown = image_basis(grown);
            if (grown.cols() == s.cols()) return s;
            s = grown;
        }
    };
    for (int j = 0; j < n; ++j) {
        Matrix<F> e(f, n, 1);
        e.at(j, 0) = f.one();
        if (solve(span, e)) continue;
        genvecs.push_back(e);
        auto all = span.hstack(e);
        span = closure(image_basis(all));
        if (span.cols() == n) break;
    }
    // candidate copies: for each generator, each indecomposable copy of the
    // regular module restricted along its inclusion
    struct Copy {
        ModPtr<F> proj;
        Matrix<F> map;  // n x dim(proj): module map as full matrix
    };
    std::vector<Copy> copies;
    for (const auto& gv : genvecs) {
        // map B -> m, b |-> b . gv  (columns over the basis of B)
        Matrix<F> free_map(f, n, algp->dim);
        for (int b = 0; b < algp->dim; ++b) {
            auto col = m->action_block(b).mul(gv);
            for (int i = 0; i < n; ++i) free_map.at(i, b) = col.at(i, 0);
        }
        for (const auto& fac : regdec.factors)
            for (const auto& [inc, proj] : fac.copies)
                copies.push_back({fac.module, free_map.mul(inc.full())});
    }
    // greedy drop while surjective
    std::vector<bool> keep(copies.size(), true);
    auto total_rank = [&]() {
        Matrix<F> all(f, n, 0);
        for (size_t c = 0; c < copies.size(); ++c)
            if (keep[c]) all = all.hstack(copies[c].map);
        return rank(all);
    };
    if (total_rank() != n) throw input_error("internal: free cover not surjective");
    for (size_t c = 0; c < copies.size(); ++c) {
        keep[c] = false;
        if (total_rank() != n) keep[c] = true;
    }
    std::vector<ModPtr<F>> parts;
    std::vector<Matrix<F>> maps;
    for (size_t c = 0; c < copies.size(); ++c)
        if (keep[c]) {
            parts.push_back(copies[c].proj);
            maps.push_back(copies[c].map);
        }
    auto sum = direct_sum(algp, parts);
    Matrix<F> big(f, n, sum.module->total_dim());
    int at = 0;
    for (const auto& mp : maps) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < mp.cols(); ++j) big.at(i, at + j) = mp.at(i, j);
        at += mp.cols();
    }
    ModuleMap<F> onto{sum.module, m, {big}};
    return {sum.module, std::move(onto), {}};
}

template <class F>
CoverStep<F> projective_cover(const ModPtr<F>& m) {
    if (m->algebra()->is_quiver) return projective_cover_quiver(m);
    return projective_cover_abstract(m);
}

}  // namespace detail

// Extend (or create) the cached minimal projective resolution of m until it
// has `depth` terms, completes, or (stop_on_repeat) a repeated syzygy
// certifies non-termination.
template <class F>
const Resolution<F>& min_projective_resolution(const ModPtr<F>& m, int depth,
                                               bool stop_on_repeat = false) {
    auto& cache = caches_of(*m->algebra()).proj_res;
    auto it = cache.find(m->key());
    std::shared_ptr<Resolution<F>> res;
    if (it != cache.end())
        res = it->second;
    else {
        res = std::make_shared<Resolution<F>>();
        res->projective = true;
        res->start = m;
        cache[m->key()] = res;
    }
    while (!res->complete && res->depth() < depth &&
           !(stop_on_repeat && res->repeat.has_value())) {
        ModPtr<F> target = res->terms.empty() ? m : res->syzygies.back();
        if (target->total_dim() == 0) {
            res->complete = true;
            break;
        }
        auto step = detail::projective_cover(target);
        auto fact = map_factorization(step.onto);
        ModuleMap<F> connecting =
            res->terms.empty() ? step.onto : compose(res->syz_inc.back(), step.onto);
        res->terms.push_back(step.cover);
        res->maps.push_back(std::move(connecting));
        res->content.push_back(step.content);
        res->syzygies.push_back(fact.kernel.module);
        res->syz_inc.push_back(fact.kernel.inclusion);
        if (fact.kernel.module->total_dim() == 0) res->complete = true;
        // repetition: compare the new syzygy with all earlier ones
        if (!res->complete && !res->repeat) {
            int last = static_cast<int>(res->syzygies.size()) - 1;
            for (int i = 0; i < last; ++i)
                if (res->syzygies[i]->total_dim() == res->syzygies[last]->total_dim() &&
                    res->syzygies[i]->dims() == res->syzygies[last]->dims() &&
                    modules_isomorphic(res->syzygies[i], res->syzygies[last])) {
                    res->repeat = {i, last};
                    break;
                }
        }
    }
    return *res;
}

// projective dimension with an explicit cap
template <class F>
DimValue projective_dimension(const ModPtr<F>& m, int cap = 64) {
    auto& pdc = caches_of(*m->algebra()).pd;
    auto it = pdc.find(m->key());
    if (it != pdc.end() && (it->second.is_finite() || it->second.is_infinite() ||
                            it->second.n >= cap))
        return it->second;
    const auto& res = min_projective_resolution(m, cap + 1, true);
    DimValue out;
    if (res.complete)
        out = DimValue::finite(res.depth() == 0 ? 0 : res.depth() - 1);
    else if (res.repeat)
        out = DimValue::infinite();
    else
        out = DimValue::at_least(cap);
    pdc[m->key()] = out;
    return out;
}

template <class F>
DimValue injective_dimension(const ModPtr<F>& m, int cap = 64) {
    return projective_dimension(dualize(m), cap);
}

// ---------------------------------------------------------------------------
// Ext
// ---------------------------------------------------------------------------

namespace detail {

// rank of Hom(T_j, n) -> Hom(T_{j+1}, n), f |-> f . d_{j+1}
template <class F>
int delta_rank(const Resolution<F>& res, const ModPtr<F>& n, int j,
               const std::vector<ModuleMap<F>>& hom_j,
               const std::vector<ModuleMap<F>>& hom_j1) {
    if (j + 1 >= res.depth()) return 0;  // next term is zero
    if (hom_j.empty() || hom_j1.empty()) return 0;
    const F& f = n->field();
    Matrix<F> basis(f, hom_j1[0].flatten().rows(), static_cast<int>(hom_j1.size()));
    for (size_t c = 0; c < hom_j1.size(); ++c) {
        auto v = hom_j1[c].flatten();
        for (int r = 0; r < v.rows(); ++r) basis.at(r, static_cast<int>(c)) = v.at(r, 0);
    }
    Matrix<F> cols(f, static_cast<int>(hom_j1.size()), static_cast<int>(hom_j.size()));
    for (size_t c = 0; c < hom_j.size(); ++c) {
        auto comp = compose(hom_j[c], res.maps[j + 1]);
        auto coords = solve(basis, comp.flatten());
        if (!coords) throw input_error("internal: Ext coordinates failed");
        for (int r = 0; r < coords->rows(); ++r) cols.at(r, static_cast<int>(c)) = coords->at(r, 0);
    }
    return rank(cols);
}

}  // namespace detail

// dim Ext^i(m, n). Degree 0 is the hom dimension.
template <class F>
int ext_dim(const ModPtr<F>& m, const ModPtr<F>& n, int i, int cap = 64) {
    if (!same_algebra(m->algebra(), n->algebra()))
        throw input_error("ext_dim: modules over different algebras");
    if (i < 0) throw input_error("ext_dim: negative degree");
    if (m->total_dim() == 0 || n->total_dim() == 0) return 0;
    if (i == 0) return static_cast<int>(hom_space(m, n).size());
    if (i + 1 > cap) throw undetermined_error("Ext degree beyond resolution cap", cap);
    const auto& res = min_projective_resolution(m, i + 2);
    if (res.complete && i >= res.depth()) return 0;
    auto hom_of = [&](int j) {
        return j < res.depth() ? hom_space(res.terms[j], n) : std::vector<ModuleMap<F>>{};
    };
    auto h_prev = hom_of(i - 1);
    auto h_i = hom_of(i);
    auto h_next = hom_of(i + 1);
    int r_prev = detail::delta_rank(res, n, i - 1, h_prev, h_i);
    int r_i = detail::delta_rank(res, n, i, h_i, h_next);
    return static_cast<int>(h_i.size()) - r_i - r_prev;
}

// ---------------------------------------------------------------------------
// algebra-level dimensions
// ---------------------------------------------------------------------------

template <class F>
struct HomologicalDims {
    std::vector<DimValue> pd_simple, id_simple;
    DimValue gldim;
    DimValue id_regular;   // id of A as a left module
    DimValue pd_coregular; // pd of DA
    bool gorenstein = false;
    std::optional<int> gorenstein_parameter;
    std::vector<std::pair<std::string, std::pair<DimValue, DimValue>>> requested;
};

template <class F>
HomologicalDims<F> homological_dims(const AlgPtr<F>& a, int cap = 64,
                                    const std::vector<ModPtr<F>>& extra = {}) {
    if (cap < 1) throw input_error("homological_dims: cap must be >= 1");
    HomologicalDims<F> out;
    DimValue g = DimValue::finite(0);
    for (int v = 0; v < a->nvert(); ++v) {
        auto s = standard_simple(a, v);
        out.pd_simple.push_back(projective_dimension(s, cap));
        out.id_simple.push_back(injective_dimension(s, cap));
        g = dim_max(g, out.pd_simple.back());
    }
    out.gldim = g;
    out.id_regular = injective_dimension(regular_module(a), cap);
    out.pd_coregular = projective_dimension(coregular_module(a), cap);
    out.gorenstein = out.id_regular.is_finite() && out.pd_coregular.is_finite();
    if (out.gorenstein)
        out.gorenstein_parameter = std::max(out.id_regular.n, out.pd_coregular.n);
    for (const auto& m : extra)
        out.requested.push_back(
            {m->name(), {projective_dimension(m, cap), injective_dimension(m, cap)}});
    return out;
}

// ---------------------------------------------------------------------------
// minimal (co)resolutions as reportable objects
// ---------------------------------------------------------------------------

template <class F>
Resolution<F> minimal_resolution(const ModPtr<F>& m, bool projective_direction, int cap) {
    if (cap < 0) throw input_error("minimal_resolution: cap must be >= 0");
    if (projective_direction) {
        auto res = min_projective_resolution(m, cap + 1);
        Resolution<F> out = res;
        if (!out.complete) out.minimal = true;  // truncated but each step minimal
        return out;
    }
    // injective: transport the projective resolution of D(m)
    auto dm = dualize(m);
    auto res = min_projective_resolution(dm, cap + 1);
    Resolution<F> out;
    out.projective = false;
    out.start = m;
    out.complete = res.complete;
    out.repeat = res.repeat;
    for (int j = 0; j < res.depth(); ++j) {
        auto term = dualize(res.terms[j]);
        out.terms.push_back(term);
        out.content.push_back(res.content[j]);
        if (j == 0) {
            // D of the augmentation: m = D(D m) -> D(P_0)
            std::vector<Matrix<F>> b;
            for (const auto& blk : res.maps[0].b) b.push_back(blk.transpose());
            out.maps.push_back(ModuleMap<F>{m, term, std::move(b)});
        } else {
            std::vector<Matrix<F>> b;
            for (const auto& blk : res.maps[j].b) b.push_back(blk.transpose());
            out.maps.push_back(ModuleMap<F>{out.terms[j - 1], term, std::move(b)});
        }
        out.syzygies.push_back(dualize(res.syzygies[j]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// tensor products over an algebra and Tor
// ---------------------------------------------------------------------------

// right module structure: matrices R(b) with R(b b') = R(b') R(b)
template <class F>
struct RightModule {
    AlgPtr<F> alg;
    int dim = 0;
    std::vector<Matrix<F>> mats;  // one per basis element of alg
};

// a left module with a commuting right action of a second algebra
template <class F>
struct Bimodule {
    ModPtr<F> left;
    RightModule<F> right;
};

// check the right-action axiom and the commutation of the two actions on
// every basis pair
template <class F>
bool validate_bimodule(const Bimodule<F>& bm) {
    const F& f = bm.left->field();
    if (bm.left->total_dim() != bm.right.dim) return false;
    const auto& b = *bm.right.alg;
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            auto expect = bm.right.mats[j].mul(bm.right.mats[i]);  // R(b_i b_j) = R(b_j) R(b_i)
            Matrix<F> got(f, bm.right.dim, bm.right.dim);
            for (const auto& [k, c] : b.mult[i][j]) got = got.add(bm.right.mats[k].scale(c));
            if (!expect.equals(got)) return false;
        }
    const auto& a = *bm.left->algebra();
    for (int i = 0; i < a.dim; ++i) {
        auto la = bm.left->action(i);
        for (int k = 0; k < b.dim; ++k)
            if (!la.mul(bm.right.mats[k]).equals(bm.right.mats[k].mul(la))) return false;
    }
    return true;
}

template <class F>
struct TensorSpace {
    int dim = 0;
    Matrix<F> proj;  // dim x (dimX * dimY)
    Matrix<F> sect;  // (dimX * dimY) x dim
};

// X (right B-module) tensor_B Y (left B-module, one-vertex algebra)
template <class F>
TensorSpace<F> tensor_over(const RightModule<F>& x, const ModPtr<F>& y) {
    if (!same_algebra(x.alg, y->algebra()))
        throw input_error("tensor_over: algebra mismatch between the two factors");
    const F& f = x.alg->field;
    int dx = x.dim, dy = y->total_dim();
    // relations x.b (x) y - x (x) b.y over basis triples
    Matrix<F> rel(f, dx * dy, x.alg->dim * dx * dy);
    int col = 0;
    for (int b = 0; b < x.alg->dim; ++b) {
        const auto& R = x.mats[b];
        auto L = y->action_block(b);
        for (int i = 0; i < dx; ++i)
            for (int j = 0; j < dy; ++j) {
                for (int i2 = 0; i2 < dx; ++i2) {
                    const auto& c = R.at(i2, i);
                    if (!f.is_zero(c)) rel.at(i2 * dy + j, col) = f.add(rel.at(i2 * dy + j, col), c);
                }
                for (int j2 = 0; j2 < dy; ++j2) {
                    const auto& c = L.at(j2, j);
                    if (!f.is_zero(c)) rel.at(i * dy + j2, col) = f.sub(rel.at(i * dy + j2, col), c);
                }
                ++col;
            }
    }
    auto cq = coord_quotient(image_basis(rel));
    return {cq.proj.rows(), std::move(cq.proj), std::move(cq.sect)};
}

// induced map X (x) g : X tensor Y -> X tensor Y' for B-linear g: Y -> Y'
template <class F>
Matrix<F> tensor_induced(const RightModule<F>& x, const TensorSpace<F>& tsrc,
                         const TensorSpace<F>& tdst, const Matrix<F>& g_full) {
    const F& f = g_full.field();
    int dx = x.dim;
    int dy = g_full.cols(), dy2 = g_full.rows();
    Matrix<F> big(f, dx * dy2, dx * dy);
    for (int i = 0; i < dx; ++i)
        for (int j2 = 0; j2 < dy2; ++j2)
            for (int j = 0; j < dy; ++j) big.at(i * dy2 + j2, i * dy + j) = g_full.at(j2, j);
    return tdst.proj.mul(big.mul(tsrc.sect));
}

// Tor_i^B(X, Y) from a projective resolution of Y
template <class F>
int tor_dim(const RightModule<F>& x, const ModPtr<F>& y, int i, int cap = 64) {
    if (i < 0) throw input_error("tor_dim: negative degree");
    if (x.dim == 0 || y->total_dim() == 0) return 0;
    if (i + 1 > cap) throw undetermined_error("Tor degree beyond resolution cap", cap);
    const auto& res = min_projective_resolution(y, i + 2);
    if (res.complete && i >= res.depth()) return 0;
    auto tspace = [&](int j) { return tensor_over(x, res.terms[j]); };
    auto t_i = tspace(i);
    int rank_in = 0, rank_out = 0;
    if (i + 1 < res.depth()) {
        auto t_next = tspace(i + 1);
        rank_in = rank(tensor_induced(x, t_next, t_i, res.maps[i + 1].full()));
    }
    if (i >= 1) {
        auto t_prev = tspace(i - 1);
        rank_out = rank(tensor_induced(x, t_i, t_prev, res.maps[i].full()));
    }
    return t_i.dim - rank_in - rank_out;
}

}  // namespace reldom

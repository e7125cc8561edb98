#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reldom/tilting.hpp"

namespace reldom {

// ---------------------------------------------------------------------------
// the Schur functor Hom_A(Q, -) into End_A(Q)^op-modules
// ---------------------------------------------------------------------------

template <class F>
struct SchurData {
    ModPtr<F> q;
    std::vector<ModuleMap<F>> end_basis;  // endomorphisms of q
    AlgPtr<F> b;                          // B = End_A(Q)^op
    RightModule<F> q_right;               // q as a right B-module
};

template <class F>
SchurData<F> make_schur(const ModPtr<F>& q) {
    SchurData<F> sd;
    sd.q = q;
    auto e = end_algebra_of(q);
    sd.end_basis = e.basis;
    sd.b = e.op;
    sd.q_right.alg = sd.b;
    sd.q_right.dim = q->total_dim();
    for (auto& h : e.basis) sd.q_right.mats.push_back(h.full());
    return sd;
}

// underlying space Hom_A(q, m) with B acting by precomposition
template <class F>
struct SchurImage {
    ModPtr<F> module;                 // over B
    std::vector<ModuleMap<F>> basis;  // the hom basis realizing the coordinates
};

template <class F>
SchurImage<F> schur_functor_image(const SchurData<F>& sd, const ModPtr<F>& m) {
    const F& f = m->field();
    auto basis = hom_space(sd.q, m);
    int r = static_cast<int>(basis.size());
    Matrix<F> cols(f, r ? basis[0].flatten().rows() : 0, 0);
    for (auto& h : basis) cols = cols.hstack(h.flatten());
    std::vector<Matrix<F>> blocks;
    for (int k = 0; k < sd.b->dim; ++k) {
        Matrix<F> act(f, r, r);
        for (int j = 0; j < r; ++j) {
            auto moved = compose(basis[j], sd.end_basis[k]);  // f . phi_k
            auto coords = solve(cols, moved.flatten());
            if (!coords) throw input_error("internal: Schur action left the hom space");
            for (int i = 0; i < r; ++i) act.at(i, j) = coords->at(i, 0);
        }
        blocks.push_back(std::move(act));
    }
    auto mod = std::make_shared<Module<F>>(sd.b, std::vector<int>{r}, std::move(blocks),
                                           "F(" + m->name() + ")");
    return {mod, std::move(basis)};
}

// matrix of Hom_A(q, g): Hom(q, M) -> Hom(q, N) in the chosen bases
template <class F>
Matrix<F> schur_on_map(const SchurData<F>& sd, const SchurImage<F>& fm, const SchurImage<F>& fn,
                       const ModuleMap<F>& g) {
    const F& f = sd.q->field();
    int rm = static_cast<int>(fm.basis.size()), rn = static_cast<int>(fn.basis.size());
    Matrix<F> cols(f, rn ? fn.basis[0].flatten().rows() : 0, 0);
    for (auto& h : fn.basis) cols = cols.hstack(h.flatten());
    Matrix<F> out(f, rn, rm);
    for (int j = 0; j < rm; ++j) {
        auto moved = compose(g, fm.basis[j]);
        auto coords = solve(cols, moved.flatten());
        if (!coords) throw input_error("internal: Schur image of a map failed");
        for (int i = 0; i < rn; ++i) out.at(i, j) = coords->at(i, 0);
    }
    return out;
}

// ---------------------------------------------------------------------------
// rebuilding A-modules from full action matrices (tensor results)
// ---------------------------------------------------------------------------

template <class F>
ModPtr<F> module_from_full_actions(const AlgPtr<F>& a, int dim,
                                   const std::function<Matrix<F>(int)>& act,
                                   const std::string& name = "") {
    const F& f = a->field;
    if (!a->is_quiver) {
        std::vector<Matrix<F>> blocks;
        for (int i = 0; i < a->dim; ++i) blocks.push_back(act(i));
        return std::make_shared<Module<F>>(a, std::vector<int>{dim}, std::move(blocks), name);
    }
    int nv = a->nvert();
    Matrix<F> u(f, dim, 0);
    std::vector<int> dims;
    for (int v = 0; v < nv; ++v) {
        auto comp = image_basis(act(a->idem_index[v]));
        dims.push_back(comp.cols());
        u = u.hstack(comp);
    }
    auto uinv = inverse(u);
    if (!uinv) throw input_error("idempotent actions do not decompose the space");
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + dims[v];
    std::vector<Matrix<F>> blocks;
    for (const auto& gen : a->gens) {
        auto conj = uinv->mul(act(gen.basis_index).mul(u));
        Matrix<F> blk(f, dims[gen.tgt], dims[gen.src]);
        for (int i = 0; i < dims[gen.tgt]; ++i)
            for (int j = 0; j < dims[gen.src]; ++j)
                blk.at(i, j) = conj.at(off[gen.tgt] + i, off[gen.src] + j);
        blocks.push_back(std::move(blk));
    }
    return std::make_shared<Module<F>>(a, dims, std::move(blocks), name);
}

// Q tensor_B Y carried back to an A-module, with the quotient data
template <class F>
struct InducedTensor {
    ModPtr<F> module;    // over A
    TensorSpace<F> ts;   // quotient of Q (x) Y
    Matrix<F> to_module; // change of basis: quotient coords -> module coords
};

template <class F>
InducedTensor<F> tensor_as_A_module(const ModPtr<F>& q, const SchurData<F>& sd, const ModPtr<F>& y,
                                    const std::string& name = "") {
    const F& f = q->field();
    auto ts = tensor_over(sd.q_right, y);
    int dy = y->total_dim();
    std::function<Matrix<F>(int)> act = [&](int basis_index) {
        auto full = q->action(basis_index);
        // kron(full, I_dy) conjugated into the quotient
        Matrix<F> big(f, q->total_dim() * dy, q->total_dim() * dy);
        for (int i = 0; i < full.rows(); ++i)
            for (int j = 0; j < full.cols(); ++j) {
                const auto& c = full.at(i, j);
                if (f.is_zero(c)) continue;
                for (int t = 0; t < dy; ++t) big.at(i * dy + t, j * dy + t) = c;
            }
        return ts.proj.mul(big.mul(ts.sect));
    };
    auto mod = module_from_full_actions(q->algebra(), ts.dim, act, name);
    // recover the change of basis used by module_from_full_actions
    Matrix<F> u(f, ts.dim, 0);
    if (q->algebra()->is_quiver)
        for (int v = 0; v < q->algebra()->nvert(); ++v)
            u = u.hstack(image_basis(act(q->algebra()->idem_index[v])));
    else
        u = Matrix<F>::identity(f, ts.dim);
    auto uinv = inverse(u);
    if (!uinv) throw input_error("internal: tensor change of basis failed");
    return {mod, std::move(ts), std::move(*uinv)};
}

// ---------------------------------------------------------------------------
// the Tor characterization of relative codominant dimension
// ---------------------------------------------------------------------------

template <class F>
struct TorCodominant {
    bool evaluation_bijective = false;
    std::vector<int> tor_dims;  // degrees 1..n-2
    bool verdict = false;       // codominant dimension >= n
};

template <class F>
TorCodominant<F> codominant_via_tor(const SchurData<F>& sd, const ModPtr<F>& m, int n,
                                    int cap = 64) {
    if (n < 2) throw input_error("codominant_via_tor needs n >= 2");
    TorCodominant<F> out;
    const F& f = m->field();
    auto fm = schur_functor_image(sd, m);
    auto ts = tensor_over(sd.q_right, fm.module);
    // evaluation on pure tensors: q_i (x) f_j |-> f_j(q_i)
    int dq = sd.q->total_dim(), r = fm.module->total_dim();
    Matrix<F> ev(f, m->total_dim(), dq * r);
    for (int j = 0; j < r; ++j) {
        auto full = fm.basis[j].full();
        for (int i = 0; i < dq; ++i)
            for (int t = 0; t < m->total_dim(); ++t) ev.at(t, i * r + j) = full.at(t, i);
    }
    auto eval_q = ev.mul(ts.sect);
    out.evaluation_bijective =
        ts.dim == m->total_dim() && is_invertible(eval_q);
    bool tors_vanish = true;
    for (int i = 1; i <= n - 2; ++i) {
        int t = tor_dim(sd.q_right, fm.module, i, cap);
        out.tor_dims.push_back(t);
        tors_vanish = tors_vanish && t == 0;
    }
    out.verdict = out.evaluation_bijective && tors_vanish;
    return out;
}

// ---------------------------------------------------------------------------
// double centralizer
// ---------------------------------------------------------------------------

template <class F>
struct DoubleCentralizer {
    int dim_b = 0, dim_end_e_h = 0;
    int dim_e = 0, dim_end_b_h2 = 0;
    bool b_map_bijective = false;
    bool e_map_bijective = false;
    bool pass = false;
};

template <class F>
DoubleCentralizer<F> double_centralizer_check(const ModPtr<F>& t, const ModPtr<F>& q) {
    if (!same_algebra(t->algebra(), q->algebra()))
        throw input_error("double_centralizer_check: modules over different algebras");
    const F& f = t->field();
    DoubleCentralizer<F> out;
    auto et = end_algebra_of(t);  // E = End(t)^op
    auto eq = end_algebra_of(q);  // B = End(q)^op
    out.dim_e = et.op->dim;
    out.dim_b = eq.op->dim;

    // H = Hom_A(t, q) as a left E-module: e.h = h . psi_e
    auto hbasis = hom_space(t, q);
    int r = static_cast<int>(hbasis.size());
    Matrix<F> hcols(f, r ? hbasis[0].flatten().rows() : 0, 0);
    for (auto& h : hbasis) hcols = hcols.hstack(h.flatten());
    auto coords_of = [&](const ModuleMap<F>& mmap) {
        auto c = solve(hcols, mmap.flatten());
        if (!c) throw input_error("internal: hom coordinates failed");
        return *c;
    };
    std::vector<Matrix<F>> eblocks;
    for (int k = 0; k < et.op->dim; ++k) {
        Matrix<F> act(f, r, r);
        for (int j = 0; j < r; ++j) {
            auto c = coords_of(compose(hbasis[j], et.basis[k]));
            for (int i = 0; i < r; ++i) act.at(i, j) = c.at(i, 0);
        }
        eblocks.push_back(std::move(act));
    }
    auto h_over_e =
        std::make_shared<Module<F>>(et.op, std::vector<int>{r}, std::move(eblocks), "Hom(T,Q)");
    auto end_e_h = hom_space(ModPtr<F>(h_over_e), ModPtr<F>(h_over_e));
    out.dim_end_e_h = static_cast<int>(end_e_h.size());
    // canonical map B -> End_E(H): b |-> (h |-> phi_b . h)
    Matrix<F> image(f, r * r, 0);
    for (int k = 0; k < eq.op->dim; ++k) {
        Matrix<F> rb(f, r, r);
        for (int j = 0; j < r; ++j) {
            auto c = coords_of(compose(eq.basis[k], hbasis[j]));
            for (int i = 0; i < r; ++i) rb.at(i, j) = c.at(i, 0);
        }
        image = image.hstack(vec(rb));
    }
    out.b_map_bijective = rank(image) == out.dim_b && out.dim_end_e_h == out.dim_b;

    // H2 = Hom_A(q, t) as a left B-module: b.h = h . phi_b
    auto h2basis = hom_space(q, t);
    int r2 = static_cast<int>(h2basis.size());
    Matrix<F> h2cols(f, r2 ? h2basis[0].flatten().rows() : 0, 0);
    for (auto& h : h2basis) h2cols = h2cols.hstack(h.flatten());
    auto coords2_of = [&](const ModuleMap<F>& mmap) {
        auto c = solve(h2cols, mmap.flatten());
        if (!c) throw input_error("internal: hom coordinates failed");
        return *c;
    };
    std::vector<Matrix<F>> bblocks;
    for (int k = 0; k < eq.op->dim; ++k) {
        Matrix<F> act(f, r2, r2);
        for (int j = 0; j < r2; ++j) {
            auto c = coords2_of(compose(h2basis[j], eq.basis[k]));
            for (int i = 0; i < r2; ++i) act.at(i, j) = c.at(i, 0);
        }
        bblocks.push_back(std::move(act));
    }
    auto h2_over_b =
        std::make_shared<Module<F>>(eq.op, std::vector<int>{r2}, std::move(bblocks), "Hom(Q,T)");
    auto end_b_h2 = hom_space(ModPtr<F>(h2_over_b), ModPtr<F>(h2_over_b));
    out.dim_end_b_h2 = static_cast<int>(end_b_h2.size());
    Matrix<F> image2(f, r2 * r2, 0);
    for (int k = 0; k < et.op->dim; ++k) {
        Matrix<F> re(f, r2, r2);
        for (int j = 0; j < r2; ++j) {
            auto c = coords2_of(compose(et.basis[k], h2basis[j]));
            for (int i = 0; i < r2; ++i) re.at(i, j) = c.at(i, 0);
        }
        image2 = image2.hstack(vec(re));
    }
    out.e_map_bijective = rank(image2) == out.dim_e && out.dim_end_b_h2 == out.dim_e;
    out.pass = out.b_map_bijective && out.e_map_bijective;
    return out;
}

// ---------------------------------------------------------------------------
// Ext comparison across the Schur functor (cover checks)
// ---------------------------------------------------------------------------

struct CoverPairLine {
    std::string m, n;
    std::vector<std::pair<int, int>> dims;  // (ext over A, ext over B) per degree
    bool canonical_bijective = false;       // degree-0 canonical map
    bool pass = false;
};

template <class F>
struct CoverReport {
    bool vacuous = false;
    bool pair_certified = false;
    std::vector<std::string> skipped;  // testset members outside T-perp
    std::vector<CoverPairLine> lines;
    std::vector<std::pair<std::string, bool>> tor_side;  // Tor^E_{i>0}(T, F_T M) = 0
    bool all_pass = true;
    std::optional<CanonicalTilt<F>> tilt;
};

template <class F>
CoverReport<F> cover_ext_comparison(const AlgPtr<F>& a, const ModPtr<F>& q, int d,
                                    const std::vector<ModPtr<F>>& testset, int cap = 64,
                                    std::uint64_t seed = 0) {
    CoverReport<F> rep;
    if (d <= 1) {
        rep.vacuous = true;  // degree range 0..d-2 is empty
        return rep;
    }
    auto pair = classify_pair(a, q, cap, seed);
    rep.pair_certified = pair_holds_for(pair, 2 * d, /*require_finite_gldim=*/true);
    if (!rep.pair_certified) {
        rep.all_pass = false;
        return rep;
    }
    auto tilt = construct_canonical_tilt(a, q, d, cap, seed);
    rep.tilt = tilt;
    auto t = tilt.module;
    auto sd = make_schur(q);

    // T as a right module over E = End(T)^op, for the Tor side
    auto te = make_schur(t);

    std::vector<ModPtr<F>> kept;
    for (const auto& m : testset) {
        auto hc = hat_check_membership(m, t, cap, seed);
        if (hc.in_perp == Verdict::Yes)
            kept.push_back(m);
        else
            rep.skipped.push_back(m->name());
    }
    std::vector<SchurImage<F>> images;
    for (const auto& m : kept) images.push_back(schur_functor_image(sd, m));

    const F& f = a->field;
    for (size_t mi = 0; mi < kept.size(); ++mi)
        for (size_t ni = 0; ni < kept.size(); ++ni) {
            CoverPairLine line;
            line.m = kept[mi]->name();
            line.n = kept[ni]->name();
            bool ok = true;
            for (int deg = 0; deg <= d - 2; ++deg) {
                int over_a = ext_dim(kept[mi], kept[ni], deg, cap);
                int over_b = ext_dim(ModPtr<F>(images[mi].module), ModPtr<F>(images[ni].module),
                                     deg, cap);
                line.dims.push_back({over_a, over_b});
                ok = ok && over_a == over_b;
            }
            // degree 0: the canonical map itself must be bijective
            auto homs = hom_space(kept[mi], kept[ni]);
            Matrix<F> cols(f, images[ni].module->total_dim() * images[mi].module->total_dim(), 0);
            for (auto& g : homs)
                cols = cols.hstack(vec(schur_on_map(sd, images[mi], images[ni], g)));
            int r = cols.cols() ? rank(cols) : 0;
            line.canonical_bijective =
                r == static_cast<int>(homs.size()) && line.dims[0].first == line.dims[0].second;
            ok = ok && line.canonical_bijective;
            line.pass = ok;
            rep.all_pass = rep.all_pass && ok;
            rep.lines.push_back(std::move(line));
        }

    for (const auto& m : kept) {
        auto ftm = schur_functor_image(te, m);
        bool vanish = true;
        for (int i = 1; i <= std::max(1, d); ++i)
            vanish = vanish && tor_dim(te.q_right, ftm.module, i, cap) == 0;
        rep.tor_side.push_back({m->name(), vanish});
        rep.all_pass = rep.all_pass && vanish;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// generalized Brenner-Butler instances (used by the property tests)
// ---------------------------------------------------------------------------

// the canonical map Hom_A(M, N) -> Hom_E(F_T M, F_T N) is bijective
template <class F>
bool bb_fully_faithful_instance(const SchurData<F>& t_data, const ModPtr<F>& m,
                                const ModPtr<F>& n) {
    const F& f = m->field();
    auto fm = schur_functor_image(t_data, m);
    auto fn = schur_functor_image(t_data, n);
    auto homs_a = hom_space(m, n);
    auto homs_e = hom_space(ModPtr<F>(fm.module), ModPtr<F>(fn.module));
    if (homs_a.size() != homs_e.size()) return false;
    Matrix<F> cols(f, fn.module->total_dim() * fm.module->total_dim(), 0);
    for (auto& g : homs_a) cols = cols.hstack(vec(schur_on_map(t_data, fm, fn, g)));
    return (cols.cols() ? rank(cols) : 0) == static_cast<int>(homs_a.size());
}

// Hom_A(T, T (x)_E F_T M) is isomorphic to F_T M via y |-> (t |-> t (x) y)
template <class F>
bool bb_counit_instance(const SchurData<F>& t_data, const ModPtr<F>& m) {
    const F& f = m->field();
    auto t = t_data.q;
    auto fm = schur_functor_image(t_data, m);
    auto ind = tensor_as_A_module(t, t_data, ModPtr<F>(fm.module), "T@F(M)");
    auto homs = hom_space(t, ind.module);
    if (static_cast<int>(homs.size()) != fm.module->total_dim()) return false;
    // canonical map: y_j |-> the A-map t_i |-> class(t_i (x) y_j)
    int dt = t->total_dim(), r = fm.module->total_dim();
    Matrix<F> cols(f, homs.empty() ? 0 : homs[0].flatten().rows(), 0);
    Matrix<F> hcols(f, homs.empty() ? 0 : homs[0].flatten().rows(), 0);
    for (auto& h : homs) hcols = hcols.hstack(h.flatten());
    auto uinv = ind.to_module;
    for (int j = 0; j < r; ++j) {
        // full-coordinate matrix of the map t -> T (x) F_T M
        Matrix<F> big(f, ind.ts.dim, dt);
        for (int i = 0; i < dt; ++i) {
            Matrix<F> pure(f, dt * r, 1);
            pure.at(i * r + j, 0) = f.one();
            auto cls = ind.ts.proj.mul(pure);
            for (int k = 0; k < ind.ts.dim; ++k) big.at(k, i) = cls.at(k, 0);
        }
        auto in_module_coords = uinv.mul(big);  // target in module coordinates
        // reorder into vertex blocks: both sides already share the layout of
        // module_from_full_actions (concatenated vertex components)
        std::vector<Matrix<F>> blocks;
        int at = 0;
        for (int v = 0; v < t->algebra()->nvert(); ++v) {
            Matrix<F> blk(f, ind.module->dim(v), t->dim(v));
            for (int i = 0; i < ind.module->dim(v); ++i)
                for (int c = 0; c < t->dim(v); ++c)
                    blk.at(i, c) = in_module_coords.at(at + i, t->offset(v) + c);
            at += ind.module->dim(v);
            blocks.push_back(std::move(blk));
        }
        ModuleMap<F> cand{t, ind.module, std::move(blocks)};
        cols = cols.hstack(cand.flatten());
    }
    auto coords = solve(hcols, cols);
    if (!coords) return false;  // canonical image not even A-linear combination
    return rank(*coords) == r;
}

}  // namespace reldom

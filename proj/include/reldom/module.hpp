#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reldom/algebra.hpp"
#include "reldom/caches.hpp"
#include "reldom/matrix.hpp"

namespace reldom {

// A finite-dimensional left module, stored vertex-aligned: one dimension per
// vertex of the algebra (general algebras have a single vertex) and one block
// matrix per algebra generator. For a bound quiver algebra the generators are
// the arrows; for an abstract algebra they are all basis elements, so the
// blocks are the full action matrices.
template <class F>
class Module : public std::enable_shared_from_this<Module<F>> {
  public:
    using Elt = typename F::Elt;

    Module(AlgPtr<F> alg, std::vector<int> dims, std::vector<Matrix<F>> blocks,
           std::string name = "")
        : alg_(std::move(alg)), dims_(std::move(dims)), blocks_(std::move(blocks)),
          name_(std::move(name)) {
        if (static_cast<int>(dims_.size()) != alg_->nvert())
            throw input_error("module dimension vector does not match vertex count");
        if (blocks_.size() != alg_->gens.size())
            throw input_error("module needs one block per algebra generator");
        for (size_t g = 0; g < blocks_.size(); ++g) {
            const auto& gen = alg_->gens[g];
            if (blocks_[g].rows() != dims_[gen.tgt] || blocks_[g].cols() != dims_[gen.src])
                throw input_error("module block shape mismatch at generator " + gen.label);
        }
        offsets_.resize(dims_.size() + 1, 0);
        for (size_t v = 0; v < dims_.size(); ++v) offsets_[v + 1] = offsets_[v] + dims_[v];
    }

    const AlgPtr<F>& algebra() const { return alg_; }
    const F& field() const { return alg_->field; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int v) const { return dims_[v]; }
    int total_dim() const { return offsets_.back(); }
    int offset(int v) const { return offsets_[v]; }
    const Matrix<F>& block(int g) const { return blocks_[g]; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    bool is_zero() const { return total_dim() == 0; }

    // full action matrix of an algebra basis element
    Matrix<F> action(int basis_index) const {
        const auto& a = *alg_;
        const F& f = field();
        int n = total_dim();
        Matrix<F> m(f, n, n);
        if (a.is_quiver) {
            int len = a.path_len[basis_index];
            if (len == 0) {
                int v = a.src[basis_index];
                for (int i = 0; i < dims_[v]; ++i) m.at(offset(v) + i, offset(v) + i) = f.one();
                return m;
            }
            // recover an arrow factorization: basis = arrow * shorter, scan products
            // directly instead: build by composing generator blocks along the label
            auto mat = action_of_path(basis_index);
            int s = a.src[basis_index], t = a.tgt[basis_index];
            for (int i = 0; i < dims_[t]; ++i)
                for (int j = 0; j < dims_[s]; ++j) m.at(offset(t) + i, offset(s) + j) = mat.at(i, j);
            return m;
        }
        // abstract algebra: generator g has basis_index g
        return embed_block(basis_index);
    }

    // action of a basis element as a block from its source vertex component
    // to its target vertex component
    Matrix<F> action_block(int basis_index) const {
        const auto& a = *alg_;
        if (!a.is_quiver) return blocks_[basis_index];
        if (a.path_len[basis_index] == 0)
            return Matrix<F>::identity(field(), dims_[a.src[basis_index]]);
        return action_of_path(basis_index);
    }

    // action of an arbitrary algebra element given by coefficients
    Matrix<F> action_of(const SparseVec<F>& elt) const {
        const F& f = field();
        Matrix<F> m(f, total_dim(), total_dim());
        for (const auto& [i, c] : elt) m = m.add(action(i).scale(c));
        return m;
    }

    std::string key() const {
        if (key_.empty()) {
            std::string s = alg_->key() + "#";
            for (int d : dims_) s += std::to_string(d) + ",";
            for (const auto& b : blocks_) s += "|" + b.str();
            key_ = std::move(s);
        }
        return key_;
    }

  private:
    Matrix<F> embed_block(int g) const {
        const auto& gen = alg_->gens[g];
        const F& f = field();
        Matrix<F> m(f, total_dim(), total_dim());
        for (int i = 0; i < dims_[gen.tgt]; ++i)
            for (int j = 0; j < dims_[gen.src]; ++j)
                m.at(offset(gen.tgt) + i, offset(gen.src) + j) = blocks_[g].at(i, j);
        return m;
    }

    // compose generator blocks along the stored arrow word (first-acting first)
    Matrix<F> action_of_path(int basis_index) const {
        const auto& word = alg_->arrow_word[basis_index];
        if (word.empty()) throw input_error("internal: empty arrow word for a nontrivial path");
        Matrix<F> acc = blocks_[word[0]];
        for (size_t k = 1; k < word.size(); ++k) acc = blocks_[word[k]].mul(acc);
        return acc;
    }

    AlgPtr<F> alg_;
    std::vector<int> dims_;
    std::vector<Matrix<F>> blocks_;
    std::vector<int> offsets_;
    std::string name_;
    mutable std::string key_;
};

template <class F>
using ModPtr = std::shared_ptr<const Module<F>>;

template <class F>
bool same_algebra(const AlgPtr<F>& a, const AlgPtr<F>& b) {
    return a.get() == b.get() || a->key() == b->key();
}

template <class F>
bool same_module(const ModPtr<F>& a, const ModPtr<F>& b) {
    return a.get() == b.get() ||
           (same_algebra(a->algebra(), b->algebra()) && a->key() == b->key());
}

// A homomorphism of modules, stored as one block per vertex
// (dim target × dim source).
template <class F>
struct ModuleMap {
    ModPtr<F> src, dst;
    std::vector<Matrix<F>> b;

    const Matrix<F>& at(int v) const { return b[v]; }

    Matrix<F> full() const {
        const F& f = src->field();
        Matrix<F> m(f, dst->total_dim(), src->total_dim());
        for (int v = 0; v < static_cast<int>(b.size()); ++v)
            for (int i = 0; i < b[v].rows(); ++i)
                for (int j = 0; j < b[v].cols(); ++j)
                    m.at(dst->offset(v) + i, src->offset(v) + j) = b[v].at(i, j);
        return m;
    }

    // column vector of all entries, vertex blocks concatenated
    Matrix<F> flatten() const {
        const F& f = src->field();
        int n = 0;
        for (const auto& m : b) n += m.rows() * m.cols();
        Matrix<F> v(f, n, 1);
        int at = 0;
        for (const auto& m : b)
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) v.at(at++, 0) = m.at(i, j);
        return v;
    }

    bool is_zero() const {
        for (const auto& m : b)
            if (!m.is_zero()) return false;
        return true;
    }
    int rank_total() const {
        int r = 0;
        for (const auto& m : b) r += rank(m);
        return r;
    }
    bool is_injective() const { return rank_total() == src->total_dim(); }
    bool is_surjective() const { return rank_total() == dst->total_dim(); }
    bool is_iso() const { return is_injective() && is_surjective(); }
};

template <class F>
ModuleMap<F> identity_map(const ModPtr<F>& m) {
    std::vector<Matrix<F>> b;
    for (int v = 0; v < m->algebra()->nvert(); ++v)
        b.push_back(Matrix<F>::identity(m->field(), m->dim(v)));
    return {m, m, std::move(b)};
}

template <class F>
ModuleMap<F> zero_map(const ModPtr<F>& src, const ModPtr<F>& dst) {
    std::vector<Matrix<F>> b;
    for (int v = 0; v < src->algebra()->nvert(); ++v)
        b.push_back(Matrix<F>(src->field(), dst->dim(v), src->dim(v)));
    return {src, dst, std::move(b)};
}

// g after f
template <class F>
ModuleMap<F> compose(const ModuleMap<F>& g, const ModuleMap<F>& f) {
    if (!same_module(g.src, f.dst)) throw input_error("compose: middle modules differ");
    std::vector<Matrix<F>> b;
    for (size_t v = 0; v < f.b.size(); ++v) b.push_back(g.b[v].mul(f.b[v]));
    return {f.src, g.dst, std::move(b)};
}

template <class F>
ModuleMap<F> map_add(const ModuleMap<F>& a, const ModuleMap<F>& c) {
    std::vector<Matrix<F>> b;
    for (size_t v = 0; v < a.b.size(); ++v) b.push_back(a.b[v].add(c.b[v]));
    return {a.src, a.dst, std::move(b)};
}

template <class F>
ModuleMap<F> map_scale(const ModuleMap<F>& a, const typename F::Elt& s) {
    std::vector<Matrix<F>> b;
    for (size_t v = 0; v < a.b.size(); ++v) b.push_back(a.b[v].scale(s));
    return {a.src, a.dst, std::move(b)};
}

// ---------------------------------------------------------------------------
// hom spaces
// ---------------------------------------------------------------------------

// Basis of Hom_A(M, N) as an intertwining solve over the algebra generators.
template <class F>
std::vector<ModuleMap<F>> hom_space(const ModPtr<F>& m, const ModPtr<F>& n) {
    if (!same_algebra(m->algebra(), n->algebra()))
        throw input_error("hom_space: modules over different algebras");
    const auto& alg = *m->algebra();
    const F& f = m->field();
    int nv = alg.nvert();

    std::vector<int> uoff(nv + 1, 0);
    for (int v = 0; v < nv; ++v) uoff[v + 1] = uoff[v] + n->dim(v) * m->dim(v);
    int unknowns = uoff[nv];
    if (unknowns == 0) return {};

    int rows = 0;
    for (const auto& gen : alg.gens) rows += n->dim(gen.tgt) * m->dim(gen.src);
    Matrix<F> sys(f, rows, unknowns);
    int r0 = 0;
    for (size_t g = 0; g < alg.gens.size(); ++g) {
        const auto& gen = alg.gens[g];
        const auto& A = m->block(static_cast<int>(g));  // dims m[tgt] x m[src]
        const auto& B = n->block(static_cast<int>(g));
        int s = gen.src, t = gen.tgt;
        // (F_t A - B F_s)[i, l] = 0  for i < n.dim(t), l < m.dim(s)
        for (int i = 0; i < n->dim(t); ++i)
            for (int l = 0; l < m->dim(s); ++l) {
                int row = r0 + i * m->dim(s) + l;
                for (int j = 0; j < m->dim(t); ++j) {
                    auto& cell = sys.at(row, uoff[t] + i * m->dim(t) + j);
                    cell = f.add(cell, A.at(j, l));
                }
                for (int rr = 0; rr < n->dim(s); ++rr) {
                    auto& cell = sys.at(row, uoff[s] + rr * m->dim(s) + l);
                    cell = f.sub(cell, B.at(i, rr));
                }
            }
        r0 += n->dim(t) * m->dim(s);
    }
    auto k = kernel_basis(sys);
    std::vector<ModuleMap<F>> basis;
    for (int c = 0; c < k.cols(); ++c) {
        std::vector<Matrix<F>> blocks;
        for (int v = 0; v < nv; ++v) {
            Matrix<F> blk(f, n->dim(v), m->dim(v));
            for (int i = 0; i < n->dim(v); ++i)
                for (int j = 0; j < m->dim(v); ++j)
                    blk.at(i, j) = k.at(uoff[v] + i * m->dim(v) + j, c);
            blocks.push_back(std::move(blk));
        }
        basis.push_back({m, n, std::move(blocks)});
    }
    return basis;
}

// coordinates of a map in a precomputed hom basis
template <class F>
std::optional<Matrix<F>> hom_coordinates(const std::vector<ModuleMap<F>>& basis,
                                         const ModuleMap<F>& target) {
    const F& f = target.src->field();
    if (basis.empty())
        return target.is_zero() ? std::optional<Matrix<F>>(Matrix<F>(f, 0, 1)) : std::nullopt;
    Matrix<F> cols(f, basis[0].flatten().rows(), static_cast<int>(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i) {
        auto v = basis[i].flatten();
        for (int r = 0; r < v.rows(); ++r) cols.at(r, static_cast<int>(i)) = v.at(r, 0);
    }
    return solve(cols, target.flatten());
}

// ---------------------------------------------------------------------------
// submodules, quotients, sums
// ---------------------------------------------------------------------------

template <class F>
struct SubmoduleResult {
    ModPtr<F> module;
    ModuleMap<F> inclusion;
};

template <class F>
struct QuotientResult {
    ModPtr<F> module;
    ModuleMap<F> projection;
};

// Submodule spanned (per vertex) by the given columns; the span must be
// closed under the action.
template <class F>
SubmoduleResult<F> submodule_from_vertex_spans(const ModPtr<F>& m,
                                               const std::vector<Matrix<F>>& spans,
                                               std::string name = "") {
    const auto& alg = *m->algebra();
    const F& f = m->field();
    int nv = alg.nvert();
    std::vector<Matrix<F>> basis;
    std::vector<int> dims;
    for (int v = 0; v < nv; ++v) {
        auto b = image_basis(spans[v]);
        dims.push_back(b.cols());
        basis.push_back(std::move(b));
    }
    std::vector<Matrix<F>> blocks;
    for (size_t g = 0; g < alg.gens.size(); ++g) {
        const auto& gen = alg.gens[g];
        auto mapped = m->block(static_cast<int>(g)).mul(basis[gen.src]);
        auto c = solve(basis[gen.tgt], mapped);
        if (!c) throw input_error("submodule span is not closed under the action");
        blocks.push_back(std::move(*c));
    }
    auto sub = std::make_shared<Module<F>>(m->algebra(), dims, std::move(blocks), std::move(name));
    ModuleMap<F> inc{sub, m, basis};
    return {sub, std::move(inc)};
}

// Quotient by the (closed) span of the given columns per vertex.
template <class F>
QuotientResult<F> quotient_by_vertex_spans(const ModPtr<F>& m, const std::vector<Matrix<F>>& spans,
                                           std::string name = "") {
    const auto& alg = *m->algebra();
    const F& f = m->field();
    int nv = alg.nvert();
    std::vector<Matrix<F>> proj, sect;
    std::vector<int> dims;
    for (int v = 0; v < nv; ++v) {
        auto cq = coord_quotient(spans[v]);
        dims.push_back(cq.proj.rows());
        proj.push_back(std::move(cq.proj));
        sect.push_back(std::move(cq.sect));
    }
    std::vector<Matrix<F>> blocks;
    for (size_t g = 0; g < alg.gens.size(); ++g) {
        const auto& gen = alg.gens[g];
        blocks.push_back(proj[gen.tgt].mul(m->block(static_cast<int>(g)).mul(sect[gen.src])));
    }
    auto qm = std::make_shared<Module<F>>(m->algebra(), dims, std::move(blocks), std::move(name));
    ModuleMap<F> pr{m, qm, proj};
    return {qm, std::move(pr)};
}

template <class F>
struct Factorization {
    SubmoduleResult<F> kernel;    // kernel + inclusion into source
    SubmoduleResult<F> image;     // image + inclusion into target
    ModuleMap<F> image_epi;       // source ->> image
    QuotientResult<F> cokernel;   // target ->> cokernel
};

template <class F>
Factorization<F> map_factorization(const ModuleMap<F>& fmap) {
    const F& f = fmap.src->field();
    int nv = fmap.src->algebra()->nvert();
    std::vector<Matrix<F>> kerspans, imspans;
    for (int v = 0; v < nv; ++v) {
        kerspans.push_back(kernel_basis(fmap.b[v]));
        imspans.push_back(image_basis(fmap.b[v]));
    }
    auto ker = submodule_from_vertex_spans(fmap.src, kerspans);
    auto img = submodule_from_vertex_spans(fmap.dst, imspans);
    // factor the map through its image
    std::vector<Matrix<F>> epib;
    for (int v = 0; v < nv; ++v) {
        auto c = solve(img.inclusion.b[v], fmap.b[v]);
        if (!c) throw input_error("internal: image factorization failed");
        epib.push_back(std::move(*c));
    }
    ModuleMap<F> epi{fmap.src, img.module, std::move(epib)};
    auto cok = quotient_by_vertex_spans(fmap.dst, imspans);
    return {std::move(ker), std::move(img), std::move(epi), std::move(cok)};
}

template <class F>
struct DirectSum {
    ModPtr<F> module;
    std::vector<ModuleMap<F>> inclusions;
    std::vector<ModuleMap<F>> projections;
};

template <class F>
DirectSum<F> direct_sum(const AlgPtr<F>& alg, const std::vector<ModPtr<F>>& parts,
                        std::string name = "") {
    const F& f = alg->field;
    int nv = alg->nvert();
    std::vector<int> dims(nv, 0);
    for (const auto& p : parts) {
        if (!same_algebra(p->algebra(), alg)) throw input_error("direct_sum: algebra mismatch");
        for (int v = 0; v < nv; ++v) dims[v] += p->dim(v);
    }
    std::vector<Matrix<F>> blocks;
    for (size_t g = 0; g < alg->gens.size(); ++g) {
        const auto& gen = alg->gens[g];
        Matrix<F> blk(f, dims[gen.tgt], dims[gen.src]);
        int ro = 0, co = 0;
        for (const auto& p : parts) {
            const auto& pb = p->block(static_cast<int>(g));
            for (int i = 0; i < pb.rows(); ++i)
                for (int j = 0; j < pb.cols(); ++j) blk.at(ro + i, co + j) = pb.at(i, j);
            ro += p->dim(gen.tgt);
            co += p->dim(gen.src);
        }
        blocks.push_back(std::move(blk));
    }
    auto total = std::make_shared<Module<F>>(alg, dims, std::move(blocks), std::move(name));
    DirectSum<F> out{total, {}, {}};
    std::vector<int> at(nv, 0);
    for (const auto& p : parts) {
        std::vector<Matrix<F>> inc, prj;
        for (int v = 0; v < nv; ++v) {
            Matrix<F> im(f, dims[v], p->dim(v));
            Matrix<F> pm(f, p->dim(v), dims[v]);
            for (int i = 0; i < p->dim(v); ++i) {
                im.at(at[v] + i, i) = f.one();
                pm.at(i, at[v] + i) = f.one();
            }
            inc.push_back(std::move(im));
            prj.push_back(std::move(pm));
        }
        out.inclusions.push_back({p, total, std::move(inc)});
        out.projections.push_back({total, p, std::move(prj)});
        for (int v = 0; v < nv; ++v) at[v] += p->dim(v);
    }
    return out;
}

template <class F>
ModPtr<F> zero_module(const AlgPtr<F>& alg) {
    std::vector<int> dims(alg->nvert(), 0);
    std::vector<Matrix<F>> blocks;
    for (const auto& gen : alg->gens)
        blocks.push_back(Matrix<F>(alg->field, 0, 0));
    return std::make_shared<Module<F>>(alg, dims, std::move(blocks), "0");
}

// ---------------------------------------------------------------------------
// duality
// ---------------------------------------------------------------------------

// D(M) over the opposite algebra: generator blocks transpose.
template <class F>
ModPtr<F> dualize(const ModPtr<F>& m) {
    auto op = opposite_algebra(m->algebra());
    std::vector<Matrix<F>> blocks;
    for (size_t g = 0; g < op->gens.size(); ++g) blocks.push_back(m->block(static_cast<int>(g)).transpose());
    std::string nm = m->name().empty() ? "" : "D(" + m->name() + ")";
    return std::make_shared<Module<F>>(op, m->dims(), std::move(blocks), nm);
}

// D of a map reverses direction; blocks transpose.
template <class F>
ModuleMap<F> dualize_map(const ModuleMap<F>& f, const ModPtr<F>& dual_dst,
                         const ModPtr<F>& dual_src) {
    std::vector<Matrix<F>> b;
    for (const auto& m : f.b) b.push_back(m.transpose());
    return {dual_dst, dual_src, std::move(b)};
}

// ---------------------------------------------------------------------------
// standard modules over quiver algebras
// ---------------------------------------------------------------------------

template <class F>
ModPtr<F> standard_simple(const AlgPtr<F>& alg, int v) {
    if (!alg->is_quiver || alg->idem_index.empty())
        throw input_error("simple modules need a complete idempotent list");
    auto& cache = caches_of(*alg).named;
    std::string ck = "S:" + std::to_string(v);
    if (auto it = cache.find(ck); it != cache.end()) return it->second;
    const F& f = alg->field;
    std::vector<int> dims(alg->nvert(), 0);
    dims[v] = 1;
    std::vector<Matrix<F>> blocks;
    for (const auto& gen : alg->gens) blocks.push_back(Matrix<F>(f, dims[gen.tgt], dims[gen.src]));
    auto m = std::make_shared<Module<F>>(alg, dims, std::move(blocks),
                                         "S" + alg->vertex_labels[v]);
    cache[ck] = m;
    return m;
}

template <class F>
ModPtr<F> standard_projective(const AlgPtr<F>& alg, int v) {
    if (!alg->is_quiver || alg->idem_index.empty())
        throw input_error("projective modules need a complete idempotent list");
    auto& cache = caches_of(*alg).named;
    std::string ck = "P:" + std::to_string(v);
    if (auto it = cache.find(ck); it != cache.end()) return it->second;
    const F& f = alg->field;
    int nv = alg->nvert();
    // basis: paths with source v, grouped by target vertex
    std::vector<std::vector<int>> vertex_paths(nv);
    std::vector<int> local(alg->dim, -1);
    for (int i = 0; i < alg->dim; ++i)
        if (alg->src[i] == v) {
            local[i] = static_cast<int>(vertex_paths[alg->tgt[i]].size());
            vertex_paths[alg->tgt[i]].push_back(i);
        }
    std::vector<int> dims(nv);
    for (int w = 0; w < nv; ++w) dims[w] = static_cast<int>(vertex_paths[w].size());
    std::vector<Matrix<F>> blocks;
    for (const auto& gen : alg->gens) {
        Matrix<F> blk(f, dims[gen.tgt], dims[gen.src]);
        for (int p : vertex_paths[gen.src])
            for (const auto& [k, c] : alg->mult[gen.basis_index][p])
                blk.at(local[k], local[p]) = c;
        blocks.push_back(std::move(blk));
    }
    auto m = std::make_shared<Module<F>>(alg, dims, std::move(blocks),
                                         "P" + alg->vertex_labels[v]);
    cache[ck] = m;
    return m;
}

template <class F>
ModPtr<F> standard_injective(const AlgPtr<F>& alg, int v) {
    auto& cache = caches_of(*alg).named;
    std::string ck = "I:" + std::to_string(v);
    if (auto it = cache.find(ck); it != cache.end()) return it->second;
    auto m = dualize(standard_projective(opposite_algebra(alg), v));
    auto named = std::make_shared<Module<F>>(alg, m->dims(),
                                             [&] {
                                                 std::vector<Matrix<F>> b;
                                                 for (size_t g = 0; g < alg->gens.size(); ++g)
                                                     b.push_back(m->block(static_cast<int>(g)));
                                                 return b;
                                             }(),
                                             "I" + alg->vertex_labels[v]);
    cache[ck] = named;
    return named;
}

// the regular module A (any algebra)
template <class F>
ModPtr<F> regular_module(const AlgPtr<F>& alg) {
    auto& cache = caches_of(*alg).named;
    if (auto it = cache.find("regular"); it != cache.end()) return it->second;
    ModPtr<F> m;
    if (alg->is_quiver) {
        std::vector<ModPtr<F>> parts;
        for (int v = 0; v < alg->nvert(); ++v) parts.push_back(standard_projective(alg, v));
        m = direct_sum(alg, parts, "A").module;
    } else {
        std::vector<Matrix<F>> blocks;
        for (int i = 0; i < alg->dim; ++i) blocks.push_back(alg->left_mult_matrix(i));
        m = std::make_shared<Module<F>>(alg, std::vector<int>{alg->dim}, std::move(blocks), "A");
    }
    cache["regular"] = m;
    return m;
}

template <class F>
ModPtr<F> coregular_module(const AlgPtr<F>& alg) {  // DA
    auto& cache = caches_of(*alg).named;
    if (auto it = cache.find("DA"); it != cache.end()) return it->second;
    auto m = dualize(regular_module(opposite_algebra(alg)));
    auto named = std::make_shared<Module<F>>(alg, m->dims(),
                                             [&] {
                                                 std::vector<Matrix<F>> b;
                                                 for (size_t g = 0; g < alg->gens.size(); ++g)
                                                     b.push_back(m->block(static_cast<int>(g)));
                                                 return b;
                                             }(),
                                             "DA");
    cache["DA"] = named;
    return named;
}

// radical submodule (quiver algebras: spanned by arrow images)
template <class F>
SubmoduleResult<F> radical_submodule(const ModPtr<F>& m) {
    const auto& alg = *m->algebra();
    if (!alg.is_quiver) throw input_error("radical submodule needs a quiver algebra");
    const F& f = m->field();
    int nv = alg.nvert();
    std::vector<Matrix<F>> spans;
    for (int v = 0; v < nv; ++v) spans.push_back(Matrix<F>(f, m->dim(v), 0));
    for (size_t g = 0; g < alg.gens.size(); ++g) {
        int t = alg.gens[g].tgt;
        spans[t] = spans[t].hstack(m->block(static_cast<int>(g)));
    }
    std::string nm = m->name().empty() ? "" : "rad" + m->name();
    return submodule_from_vertex_spans(m, spans, nm);
}

// socle submodule (quiver algebras: joint kernel of the arrows)
template <class F>
SubmoduleResult<F> socle_submodule(const ModPtr<F>& m) {
    const auto& alg = *m->algebra();
    if (!alg.is_quiver) throw input_error("socle needs a quiver algebra");
    const F& f = m->field();
    int nv = alg.nvert();
    std::vector<Matrix<F>> spans;
    for (int v = 0; v < nv; ++v) {
        // stack all arrow blocks out of v and take the kernel
        Matrix<F> stacked(f, 0, m->dim(v));
        for (size_t g = 0; g < alg.gens.size(); ++g)
            if (alg.gens[g].src == v) stacked = stacked.vstack(m->block(static_cast<int>(g)));
        spans.push_back(kernel_basis(stacked));
    }
    std::string nm = m->name().empty() ? "" : "soc" + m->name();
    return submodule_from_vertex_spans(m, spans, nm);
}

}  // namespace reldom

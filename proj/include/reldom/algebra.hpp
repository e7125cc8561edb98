#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reldom/errors.hpp"
#include "reldom/matrix.hpp"
#include "reldom/presentation.hpp"

namespace reldom {

// No saturation length found: the bound quiver algebra may be
// infinite-dimensional (or the cap was too small).
struct saturation_error : std::runtime_error {
    explicit saturation_error(const std::string& what) : std::runtime_error(what) {}
};

template <class F>
struct AlgebraCaches;  // defined in caches.hpp

template <class F>
using SparseVec = std::vector<std::pair<int, typename F::Elt>>;

// A finite-dimensional associative algebra given by structure constants.
// Quiver algebras additionally carry the path/vertex structure that the
// module layer exploits; endomorphism algebras are "one-vertex" algebras
// whose generators are all non-unit basis elements.
template <class F>
class Algebra : public std::enable_shared_from_this<Algebra<F>> {
  public:
    using Elt = typename F::Elt;

    F field;
    std::string name;
    int dim = 0;
    std::vector<std::string> labels;                 // per basis element
    std::vector<std::vector<SparseVec<F>>> mult;     // mult[i][j] = b_i * b_j
    SparseVec<F> unit;

    // vertex structure; general algebras have a single vertex "*"
    std::vector<std::string> vertex_labels;
    std::vector<int> src, tgt;       // per basis element
    std::vector<int> path_len;       // quiver algebras only; else empty
    std::vector<int> idem_index;     // basis index of e_v (quiver algebras)
    // quiver algebras: generator indices of each basis path, first-acting first
    std::vector<std::vector<int>> arrow_word;

    struct Gen {
        std::string label;
        int src = 0, tgt = 0;
        int basis_index = -1;  // -1 for synthetic generators
    };
    std::vector<Gen> gens;  // quiver: arrows; general: all basis elements

    bool is_quiver = false;
    std::shared_ptr<const Quiver> quiver;

    mutable std::shared_ptr<void> caches_slot;           // AlgebraCaches<F>
    mutable std::weak_ptr<const Algebra<F>> opposite_link;
    mutable std::weak_ptr<const Algebra<F>> self_link;

    int nvert() const { return static_cast<int>(vertex_labels.size()); }

    SparseVec<F> product(int i, int j) const { return mult[i][j]; }

    // multiply two coefficient vectors
    std::vector<Elt> multiply(const std::vector<Elt>& x, const std::vector<Elt>& y) const {
        std::vector<Elt> r(dim, field.zero());
        for (int i = 0; i < dim; ++i) {
            if (field.is_zero(x[i])) continue;
            for (int j = 0; j < dim; ++j) {
                if (field.is_zero(y[j])) continue;
                auto c = field.mul(x[i], y[j]);
                for (const auto& [k, s] : mult[i][j]) r[k] = field.add(r[k], field.mul(c, s));
            }
        }
        return r;
    }

    // left-multiplication matrix of basis element i in the regular basis
    Matrix<F> left_mult_matrix(int i) const {
        Matrix<F> m(field, dim, dim);
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, s] : mult[i][j]) m.at(k, j) = field.add(m.at(k, j), s);
        return m;
    }
    Matrix<F> right_mult_matrix(int j) const {
        Matrix<F> m(field, dim, dim);
        for (int i = 0; i < dim; ++i)
            for (const auto& [k, s] : mult[i][j]) m.at(k, i) = field.add(m.at(k, i), s);
        return m;
    }

    std::string key() const {
        if (!key_.empty()) return key_;
        std::string s = field.name() + "|" + std::to_string(dim) + "|";
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                for (const auto& [k, c] : mult[i][j])
                    s += std::to_string(k) + ":" + field.to_string(c) + ",";
                s += ";";
            }
        s += "/v" + std::to_string(nvert());
        key_ = std::move(s);
        return key_;
    }

  private:
    mutable std::string key_;
};

template <class F>
using AlgPtr = std::shared_ptr<const Algebra<F>>;

namespace detail {

template <class F>
struct PathUniverse {
    // all raw composable paths, grouped by length; arrows in action order
    struct Raw {
        int src, tgt;
        std::vector<int> arrows;
    };
    std::vector<std::vector<Raw>> by_len;
    std::vector<std::map<std::vector<int>, int>> index;  // arrows -> position in by_len[l]
};

}  // namespace detail

// Build the bound quiver algebra k Q / I degree by degree. Relations must be
// uniform (shared source and target) and length-homogeneous with all paths of
// length >= 2; the ideal is then graded and each graded piece is eliminated
// with one echelon pass, pivoting on the lexicographically largest path so
// the surviving basis paths are the small representatives.
template <class F>
std::shared_ptr<Algebra<F>> build_bound_quiver_algebra(const F& field,
                                                       const BoundQuiverPresentation& pres,
                                                       int length_cap = -1) {
    const Quiver& q = pres.quiver;
    int nv = static_cast<int>(q.vertices.size());
    int na = static_cast<int>(q.arrows.size());
    if (nv == 0) throw presentation_error({0, 0, "quiver has no vertices"});
    if (length_cap < 0) length_cap = 2 * (na + nv);
    if (length_cap < 2) throw presentation_error({0, 0, "length cap must be at least 2"});

    // validate relations: uniform, homogeneous, length >= 2
    struct Rel {
        int src, tgt, len;
        std::vector<std::pair<typename F::Elt, std::vector<int>>> terms;
    };
    std::vector<Rel> rels;
    for (const auto& expr : pres.relations) {
        if (expr.terms.empty()) throw presentation_error({0, 0, "empty relation"});
        Rel r{-1, -1, -1, {}};
        for (const auto& t : expr.terms) {
            if (t.arrows.size() < 2)
                throw presentation_error(
                    {0, 0, "admissibility: relation paths must have length >= 2"});
            int s = q.arrows[t.arrows.front()].src;
            int e = q.arrows[t.arrows.back()].tgt;
            for (size_t i = 0; i + 1 < t.arrows.size(); ++i)
                if (q.arrows[t.arrows[i]].tgt != q.arrows[t.arrows[i + 1]].src)
                    throw presentation_error({0, 0, "relation path is not composable"});
            int len = static_cast<int>(t.arrows.size());
            if (r.src < 0) {
                r.src = s;
                r.tgt = e;
                r.len = len;
            } else if (r.src != s || r.tgt != e) {
                throw presentation_error({0, 0, "non-uniform relation: mixed sources or targets"});
            } else if (r.len != len) {
                throw presentation_error(
                    {0, 0, "non-uniform relation: mixed path lengths are not supported"});
            }
            r.terms.push_back({field.from_string(t.coeff), t.arrows});
        }
        rels.push_back(std::move(r));
    }

    // enumerate raw paths per length
    detail::PathUniverse<F> uni;
    uni.by_len.emplace_back();
    uni.index.emplace_back();
    for (int v = 0; v < nv; ++v) {
        uni.index[0][{-1 - v}] = v;  // sentinel key for trivial paths
        uni.by_len[0].push_back({v, v, {}});
    }
    const size_t path_guard = 200000;
    size_t total_paths = nv;
    int saturation = -1;

    // per length: surviving path positions and reduction of every raw path
    // into the global basis (filled as lengths are processed)
    std::vector<std::vector<int>> survivors(1);
    for (int v = 0; v < nv; ++v) survivors[0].push_back(v);

    std::vector<int> global_index_of;  // flattened: assigned later
    std::vector<std::vector<SparseVec<F>>> reduce_raw(1);  // per length, per raw path

    for (int v = 0; v < nv; ++v) reduce_raw[0].push_back({{v, field.one()}});

    auto lex_less = [](const typename detail::PathUniverse<F>::Raw& a,
                       const typename detail::PathUniverse<F>::Raw& b) {
        return a.arrows < b.arrows;
    };

    for (int len = 1; len <= length_cap; ++len) {
        std::vector<typename detail::PathUniverse<F>::Raw> cur;
        for (const auto& p : uni.by_len[len - 1]) {
            for (int a = 0; a < na; ++a)
                if (q.arrows[a].src == p.tgt) {
                    auto arr = p.arrows;
                    arr.push_back(a);
                    cur.push_back({p.src, q.arrows[a].tgt, std::move(arr)});
                }
        }
        std::sort(cur.begin(), cur.end(), lex_less);
        total_paths += cur.size();
        if (total_paths > path_guard)
            throw saturation_error("path growth exceeds " + std::to_string(path_guard) +
                                   "; possibly infinite-dimensional");
        uni.by_len.push_back(cur);
        uni.index.emplace_back();
        for (int i = 0; i < static_cast<int>(cur.size()); ++i) uni.index[len][cur[i].arrows] = i;

        int npaths = static_cast<int>(cur.size());
        if (npaths == 0) {
            saturation = len;
            survivors.emplace_back();
            reduce_raw.emplace_back();
            break;
        }

        // ideal rows of this degree
        std::vector<std::vector<typename F::Elt>> rows;
        if (len >= 2) {
            for (const auto& r : rels) {
                if (r.len > len) continue;
                for (int ul = 0; ul + r.len <= len; ++ul) {
                    int vl = len - r.len - ul;
                    for (const auto& u : uni.by_len[ul]) {
                        if (u.src != r.tgt) continue;  // u comes after r
                        for (const auto& w : uni.by_len[vl]) {
                            if (w.tgt != r.src) continue;  // w comes before r
                            std::vector<typename F::Elt> row(npaths, field.zero());
                            for (const auto& [c, mid] : r.terms) {
                                std::vector<int> arr = w.arrows;
                                arr.insert(arr.end(), mid.begin(), mid.end());
                                arr.insert(arr.end(), u.arrows.begin(), u.arrows.end());
                                auto it = uni.index[len].find(arr);
                                if (it == uni.index[len].end())
                                    throw input_error("internal: path lookup failed");
                                row[it->second] = field.add(row[it->second], c);
                            }
                            rows.push_back(std::move(row));
                        }
                    }
                }
            }
        }

        // echelon with columns in descending path order, so pivots (the
        // eliminated representatives) are the lexicographically largest
        Matrix<F> m(field, static_cast<int>(rows.size()), npaths);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < npaths; ++j) m.at(i, j) = rows[i][npaths - 1 - j];
        auto rr = rref(m);
        std::vector<bool> reducible(npaths, false);
        std::vector<int> pivot_row(npaths, -1);
        for (int i = 0; i < rr.rank; ++i) {
            int path = npaths - 1 - rr.pivots[i];
            reducible[path] = true;
            pivot_row[path] = i;
        }
        survivors.emplace_back();
        reduce_raw.emplace_back(npaths);
        for (int p = 0; p < npaths; ++p)
            if (!reducible[p]) survivors[len].push_back(p);
        if (survivors[len].empty()) {
            saturation = len;
            break;
        }
        for (int p = 0; p < npaths; ++p) {
            if (!reducible[p]) {
                reduce_raw[len][p] = {{p, field.one()}};  // local index for now
            } else {
                SparseVec<F> sv;
                int i = pivot_row[p];
                for (int j = 0; j < npaths; ++j) {
                    int col = npaths - 1 - j;  // column of path j
                    if (j == p) continue;
                    const auto& c = rr.mat.at(i, col);
                    if (!field.is_zero(c)) sv.push_back({j, field.neg(c)});
                }
                reduce_raw[len][p] = std::move(sv);
            }
        }
    }
    if (saturation < 0)
        throw saturation_error("no saturation by length cap " + std::to_string(length_cap) +
                               "; possibly infinite-dimensional");

    // assemble the algebra
    auto alg = std::make_shared<Algebra<F>>();
    alg->field = field;
    alg->name = pres.name;
    alg->is_quiver = true;
    alg->quiver = std::make_shared<Quiver>(q);
    for (const auto& v : q.vertices) alg->vertex_labels.push_back(v);

    // global basis indices
    std::vector<std::vector<int>> global(saturation + 1);
    int next = 0;
    for (int len = 0; len < saturation; ++len) {
        global[len].assign(uni.by_len[len].size(), -1);
        for (int p : survivors[len]) global[len][p] = next++;
    }
    alg->dim = next;
    alg->labels.resize(next);
    alg->src.resize(next);
    alg->tgt.resize(next);
    alg->path_len.resize(next);
    alg->arrow_word.resize(next);
    for (int len = 0; len < saturation; ++len) {
        for (int p : survivors[len]) {
            const auto& raw = uni.by_len[len][p];
            int g = global[len][p];
            alg->src[g] = raw.src;
            alg->tgt[g] = raw.tgt;
            alg->path_len[g] = len;
            alg->arrow_word[g] = raw.arrows;
            if (len == 0) {
                alg->labels[g] = "e" + q.vertices[raw.src];
            } else {
                std::string lab;
                for (int i = static_cast<int>(raw.arrows.size()) - 1; i >= 0; --i) {
                    lab += q.arrows[raw.arrows[i]].label;
                    if (i > 0) lab += "*";
                }
                alg->labels[g] = lab;
            }
        }
    }
    for (int v = 0; v < nv; ++v) alg->idem_index.push_back(global[0][v]);
    for (int a = 0; a < na; ++a) {
        auto it = uni.index[1].find({a});
        if (it == uni.index[1].end() || global[1].empty() || global[1][it->second] < 0)
            throw input_error("internal: arrow not in basis");
        alg->gens.push_back({q.arrows[a].label, q.arrows[a].src, q.arrows[a].tgt,
                             global[1][it->second]});
    }
    for (int v = 0; v < nv; ++v) alg->unit.push_back({alg->idem_index[v], field.one()});

    // structure constants by concatenation + reduction
    auto globalize = [&](int len, const SparseVec<F>& local) {
        SparseVec<F> out;
        for (const auto& [p, c] : local) {
            int g = global[len][p];
            if (g < 0) throw input_error("internal: reduction hit a reducible path");
            out.push_back({g, c});
        }
        return out;
    };
    alg->mult.assign(next, std::vector<SparseVec<F>>(next));
    for (int len_i = 0; len_i < saturation; ++len_i)
        for (int pi : survivors[len_i]) {
            const auto& a = uni.by_len[len_i][pi];
            int gi = global[len_i][pi];
            for (int len_j = 0; len_j < saturation; ++len_j)
                for (int pj : survivors[len_j]) {
                    const auto& b = uni.by_len[len_j][pj];
                    int gj = global[len_j][pj];
                    if (a.src != b.tgt) continue;  // b then a
                    int len = len_i + len_j;
                    if (len >= saturation) continue;  // reduces to zero
                    std::vector<int> arr = b.arrows;
                    arr.insert(arr.end(), a.arrows.begin(), a.arrows.end());
                    auto it = uni.index[len].find(len == 0 ? std::vector<int>{-1 - a.src} : arr);
                    if (it == uni.index[len].end()) throw input_error("internal: concat lookup");
                    alg->mult[gi][gj] = globalize(len, reduce_raw[len][it->second]);
                }
        }
    alg->self_link = alg;
    return alg;
}

// One-vertex algebra from explicit structure constants (endomorphism
// algebras). Idempotents are not computed.
template <class F>
std::shared_ptr<Algebra<F>> make_abstract_algebra(const F& field, std::string name, int dim,
                                                  std::vector<std::string> labels,
                                                  std::vector<std::vector<SparseVec<F>>> mult,
                                                  SparseVec<F> unit) {
    auto alg = std::make_shared<Algebra<F>>();
    alg->field = field;
    alg->name = std::move(name);
    alg->dim = dim;
    alg->labels = std::move(labels);
    alg->mult = std::move(mult);
    alg->unit = std::move(unit);
    alg->vertex_labels = {"*"};
    alg->src.assign(dim, 0);
    alg->tgt.assign(dim, 0);
    alg->is_quiver = false;
    for (int i = 0; i < dim; ++i) alg->gens.push_back({alg->labels[i], 0, 0, i});
    alg->self_link = alg;
    return alg;
}

// Opposite algebra: same basis, structure constants with the two factor
// indices swapped. Applying it twice hands back the original object.
template <class F>
AlgPtr<F> opposite_algebra(const AlgPtr<F>& a) {
    if (auto linked = a->opposite_link.lock()) return linked;
    auto op = std::make_shared<Algebra<F>>();
    op->field = a->field;
    op->name = a->name + "^op";
    op->dim = a->dim;
    op->labels = a->labels;
    op->mult.assign(a->dim, std::vector<SparseVec<F>>(a->dim));
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) op->mult[i][j] = a->mult[j][i];
    op->unit = a->unit;
    op->vertex_labels = a->vertex_labels;
    op->src = a->tgt;  // sources and targets swap
    op->tgt = a->src;
    op->path_len = a->path_len;
    op->idem_index = a->idem_index;
    op->arrow_word = a->arrow_word;
    for (auto& w : op->arrow_word) std::reverse(w.begin(), w.end());
    for (const auto& g : a->gens) op->gens.push_back({g.label, g.tgt, g.src, g.basis_index});
    op->is_quiver = a->is_quiver;
    if (a->quiver) op->quiver = std::make_shared<Quiver>(a->quiver->reversed());
    op->opposite_link = a;
    op->self_link = op;
    a->opposite_link = op;
    return op;
}

// Jacobson radical basis. Exact for quiver algebras (the arrow ideal) and for
// any algebra over QQ (trace-form kernel, valid in characteristic zero).
template <class F>
Matrix<F> algebra_radical(const AlgPtr<F>& a);

template <>
inline Matrix<FieldQQ> algebra_radical(const AlgPtr<FieldQQ>& a) {
    const auto& f = a->field;
    if (a->is_quiver) {
        std::vector<int> idx;
        for (int i = 0; i < a->dim; ++i)
            if (a->path_len[i] >= 1) idx.push_back(i);
        Matrix<FieldQQ> m(f, a->dim, static_cast<int>(idx.size()));
        for (int j = 0; j < static_cast<int>(idx.size()); ++j) m.at(idx[j], j) = f.one();
        return m;
    }
    // trace form T(x,y) = tr(L_x L_y)
    std::vector<Matrix<FieldQQ>> lm;
    for (int i = 0; i < a->dim; ++i) lm.push_back(a->left_mult_matrix(i));
    Matrix<FieldQQ> t(f, a->dim, a->dim);
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) {
            auto prod = lm[i].mul(lm[j]);
            auto tr = f.zero();
            for (int k = 0; k < a->dim; ++k) tr = f.add(tr, prod.at(k, k));
            t.at(i, j) = tr;
        }
    return kernel_basis(t);
}

template <>
inline Matrix<FieldGF> algebra_radical(const AlgPtr<FieldGF>& a) {
    const auto& f = a->field;
    if (a->is_quiver) {
        std::vector<int> idx;
        for (int i = 0; i < a->dim; ++i)
            if (a->path_len[i] >= 1) idx.push_back(i);
        Matrix<FieldGF> m(f, a->dim, static_cast<int>(idx.size()));
        for (int j = 0; j < static_cast<int>(idx.size()); ++j) m.at(idx[j], j) = f.one();
        return m;
    }
    throw input_error(
        "radical over GF(p) is only computed for bound quiver algebras (trace form is "
        "unreliable in positive characteristic)");
}

}  // namespace reldom

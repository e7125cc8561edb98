#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reldom/formats.hpp"
#include "reldom/module.hpp"

namespace reldom {

// ---------------------------------------------------------------------------
// named standard modules and module expressions
// ---------------------------------------------------------------------------

// grammar:  expr := atom ('+' atom)*
//           atom := 'rad'* base ('/' 'S' vertex)*
//           base := 'P'v | 'I'v | 'S'v | 'A' | 'DA' | <loaded name>
// The quotient X/Sv divides out the v-isotypic part of the socle of X.
template <class F>
ModPtr<F> eval_module_expr(const AlgPtr<F>& alg, const std::string& expr,
                           const std::map<std::string, ModPtr<F>>& named = {}) {
    auto fail = [&](const std::string& why) {
        throw input_error("module expression '" + expr + "': " + why);
    };
    auto vertex_of = [&](const std::string& lbl) {
        for (int v = 0; v < alg->nvert(); ++v)
            if (alg->vertex_labels[v] == lbl) return v;
        fail("unknown vertex label " + lbl);
        return -1;
    };
    std::vector<std::string> atoms;
    {
        std::string cur;
        for (char c : expr) {
            if (c == '+') {
                atoms.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c)))
                cur += c;
        }
        atoms.push_back(cur);
    }
    std::vector<ModPtr<F>> parts;
    for (auto& atom : atoms) {
        if (atom.empty()) fail("empty summand");
        std::string rest = atom;
        int rad_count = 0;
        while (rest.rfind("rad", 0) == 0 && rest.size() > 3) {
            ++rad_count;
            rest = rest.substr(3);
        }
        // split off /S<v> quotients
        std::vector<std::string> quots;
        auto slash = rest.find('/');
        std::string base = slash == std::string::npos ? rest : rest.substr(0, slash);
        while (slash != std::string::npos) {
            auto next = rest.find('/', slash + 1);
            quots.push_back(rest.substr(slash + 1, next == std::string::npos ? std::string::npos
                                                                             : next - slash - 1));
            slash = next;
        }
        ModPtr<F> m;
        if (auto it = named.find(base); it != named.end()) {
            m = it->second;
        } else if (base == "A") {
            m = regular_module(alg);
        } else if (base == "DA") {
            m = coregular_module(alg);
        } else if (base.size() >= 2 && (base[0] == 'P' || base[0] == 'I' || base[0] == 'S')) {
            int v = vertex_of(base.substr(1));
            m = base[0] == 'P' ? standard_projective(alg, v)
                               : (base[0] == 'I' ? standard_injective(alg, v)
                                                 : standard_simple(alg, v));
        } else {
            fail("unknown module name " + base);
        }
        for (int k = 0; k < rad_count; ++k) m = radical_submodule(m).module;
        for (auto& qs : quots) {
            if (qs.size() < 2 || qs[0] != 'S') fail("quotients must be by a simple: /S<vertex>");
            int v = vertex_of(qs.substr(1));
            auto soc = socle_submodule(m);
            std::vector<Matrix<F>> spans;
            for (int w = 0; w < alg->nvert(); ++w)
                spans.push_back(w == v ? soc.inclusion.b[w]
                                       : Matrix<F>(alg->field, m->dim(w), 0));
            if (spans[v].cols() == 0) fail("no S" + qs.substr(1) + " inside the socle");
            m = quotient_by_vertex_spans(m, spans).module;
        }
        parts.push_back(m);
    }
    if (parts.size() == 1) {
        auto named_copy = std::make_shared<Module<F>>(
            alg, parts[0]->dims(),
            [&] {
                std::vector<Matrix<F>> b;
                for (size_t g = 0; g < alg->gens.size(); ++g)
                    b.push_back(parts[0]->block(static_cast<int>(g)));
                return b;
            }(),
            expr);
        return named_copy;
    }
    return direct_sum(alg, parts, expr).module;
}

// ---------------------------------------------------------------------------
// explicit modules from .mod files
// ---------------------------------------------------------------------------

template <class F>
ModPtr<F> module_from_parsed(const AlgPtr<F>& alg, const ParsedModule& pm) {
    if (!alg->is_quiver) throw input_error("module files require a bound quiver algebra");
    const F& f = alg->field;
    if (!pm.over.empty() && pm.over != alg->name)
        throw input_error("module '" + pm.name + "' is declared over '" + pm.over +
                          "', not over '" + alg->name + "'");
    std::vector<int> dims(alg->nvert(), 0);
    for (const auto& [lbl, n] : pm.dims) {
        int v = -1;
        for (int w = 0; w < alg->nvert(); ++w)
            if (alg->vertex_labels[w] == lbl) v = w;
        if (v < 0) throw input_error("module '" + pm.name + "': unknown vertex " + lbl);
        if (n < 0) throw input_error("module '" + pm.name + "': negative dimension");
        dims[v] = n;
    }
    std::vector<Matrix<F>> blocks;
    for (const auto& gen : alg->gens) {
        Matrix<F> blk(f, dims[gen.tgt], dims[gen.src]);
        auto it = pm.maps.find(gen.label);
        if (it != pm.maps.end() && !(dims[gen.tgt] == 0 || dims[gen.src] == 0)) {
            const auto& rows = it->second;
            if (static_cast<int>(rows.size()) != dims[gen.tgt])
                throw input_error("module '" + pm.name + "': map " + gen.label +
                                  " has wrong row count");
            for (int i = 0; i < dims[gen.tgt]; ++i) {
                if (static_cast<int>(rows[i].size()) != dims[gen.src])
                    throw input_error("module '" + pm.name + "': map " + gen.label +
                                      " has wrong column count");
                for (int j = 0; j < dims[gen.src]; ++j) blk.at(i, j) = f.from_string(rows[i][j]);
            }
        }
        blocks.push_back(std::move(blk));
    }
    return std::make_shared<Module<F>>(alg, dims, std::move(blocks), pm.name);
}

// check that the generator blocks satisfy every relation of the presentation
template <class F>
bool module_satisfies_relations(const ModPtr<F>& m, const BoundQuiverPresentation& pres) {
    const F& f = m->field();
    for (const auto& rel : pres.relations) {
        int src = pres.quiver.arrows[rel.terms[0].arrows.front()].src;
        int tgt = pres.quiver.arrows[rel.terms[0].arrows.back()].tgt;
        Matrix<F> acc(f, m->dim(tgt), m->dim(src));
        for (const auto& t : rel.terms) {
            Matrix<F> prod = Matrix<F>::identity(f, m->dim(src));
            for (int a : t.arrows) prod = m->block(a).mul(prod);
            acc = acc.add(prod.scale(f.from_string(t.coeff)));
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace reldom

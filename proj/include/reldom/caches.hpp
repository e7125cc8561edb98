#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reldom/algebra.hpp"
#include "reldom/dimvalue.hpp"

namespace reldom {

template <class F>
class Module;
template <class F>
struct ModuleMap;
template <class F>
struct Resolution;
template <class F>
struct Decomposition;

// Per-algebra memoization. Single-writer discipline: callers running
// computations concurrently must either share nothing or synchronize around
// these maps themselves.
template <class F>
struct AlgebraCaches {
    std::map<std::string, std::shared_ptr<const Module<F>>> named;  // "P:v", "I:v", "S:v", ...
    std::map<std::string, std::shared_ptr<Resolution<F>>> proj_res;
    std::map<std::string, std::shared_ptr<const Decomposition<F>>> decomp;
    std::map<std::string, DimValue> pd;
};

template <class F>
AlgebraCaches<F>& caches_of(const Algebra<F>& a) {
    if (!a.caches_slot) a.caches_slot = std::shared_ptr<void>(new AlgebraCaches<F>());
    return *static_cast<AlgebraCaches<F>*>(a.caches_slot.get());
}

}  // namespace reldom

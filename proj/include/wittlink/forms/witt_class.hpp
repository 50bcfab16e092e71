#pragma once

#include <vector>

namespace wittlink {

/// Diagonal representative <a_1, ..., a_r> of a Witt class over the fixed field of Ctx.
/// Entries are nonzero and fixed by the involution.
template <class Ctx>
struct WittClass {
    Ctx ctx{};
    std::vector<typename Ctx::Elem> entries;

    std::size_t rank() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
};

}  // namespace wittlink

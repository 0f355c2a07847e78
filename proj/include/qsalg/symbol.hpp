#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace qsalg {

using SymbolId = std::uint32_t;

/// Process-wide interning table for parameter names. Every ParamPoly refers
/// to symbols through this table, so all values share one symbol table.
class SymbolTable {
public:
  static SymbolTable &instance() {
    static SymbolTable table;
    return table;
  }

  SymbolId intern(std::string_view name) {
    std::lock_guard lock(mu_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end())
      return it->second;
    auto id = static_cast<SymbolId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }

  std::optional<SymbolId> find(std::string_view name) const {
    std::lock_guard lock(mu_);
    auto it = ids_.find(std::string(name));
    if (it == ids_.end())
      return std::nullopt;
    return it->second;
  }

  // References stay valid: deque::emplace_back never moves existing elements.
  const std::string &name(SymbolId id) const {
    std::lock_guard lock(mu_);
    return names_.at(id);
  }

private:
  SymbolTable() = default;

  mutable std::mutex mu_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, SymbolId> ids_;
};

inline SymbolId intern(std::string_view name) { return SymbolTable::instance().intern(name); }
inline const std::string &symbol_name(SymbolId id) { return SymbolTable::instance().name(id); }

} // namespace qsalg

#include "mfcat/poly/ring.hpp"

#include <cctype>
#include <mutex>
#include <set>

#include "mfcat/error.hpp"

namespace mfcat {

bool valid_variable_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

RingContext::RingContext(std::vector<std::string> variables, Field field, MonomialOrder order)
    : variables_(std::move(variables)), field_(field), order_(order) {
  std::set<std::string_view> seen;
  for (const auto& v : variables_) {
    if (!valid_variable_name(v)) throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(ErrorCode::VariableCollision, "duplicate variable '" + v + "'");
  }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

Ring make_ring(std::vector<std::string> variables, Field field, MonomialOrder order) {
  // Equal rings are interned so that ring checks are usually pointer compares.
  static std::mutex mutex;
  static std::vector<std::weak_ptr<const RingContext>> registry;
  auto fresh = std::make_shared<const RingContext>(std::move(variables), field, order);
  std::lock_guard lock(mutex);
  std::erase_if(registry, [](const auto& w) { return w.expired(); });
  for (const auto& w : registry) {
    if (auto existing = w.lock(); existing && *existing == *fresh) return existing;
  }
  registry.push_back(fresh);
  return fresh;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw Error(ErrorCode::RingMismatch, "operands live in different rings");
}

}  // namespace mfcat

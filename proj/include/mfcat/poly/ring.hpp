#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfcat/poly/field.hpp"
#include "mfcat/poly/monomial.hpp"

namespace mfcat {

// Polynomial ring k[x_1, ..., x_n]. Variable precedence follows the order of
// the names: the first variable is the largest.
class RingContext {
 public:
  RingContext(std::vector<std::string> variables, Field field,
              MonomialOrder order = MonomialOrder::Grevlex);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  const Field& field() const noexcept { return field_; }
  MonomialOrder order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.field_ == b.field_ && a.order_ == b.order_ && a.variables_ == b.variables_;
  }

 private:
  std::vector<std::string> variables_;
  Field field_;
  MonomialOrder order_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(std::vector<std::string> variables, Field field = Field::rationals(),
               MonomialOrder order = MonomialOrder::Grevlex);

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

// Throws RingMismatch unless the rings agree.
void require_same_ring(const Ring& a, const Ring& b);

bool valid_variable_name(std::string_view name);

}  // namespace mfcat

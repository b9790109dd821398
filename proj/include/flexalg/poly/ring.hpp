#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flexalg {

// An ordered list of distinct variable names. Cheap to copy; two rings are
// equal when their variable lists are equal.
class Ring {
 public:
  Ring();
  explicit Ring(std::vector<std::string> variables);

  std::size_t arity() const noexcept { return vars_->size(); }
  const std::vector<std::string>& variables() const noexcept { return *vars_; }
  const std::string& name(std::size_t i) const { return vars_->at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;

  // Ring with `name` appended as the last variable.
  Ring extended(const std::string& name) const;
  // A name derived from `stem` that is not yet a variable of this ring.
  std::string fresh_name(std::string_view stem) const;
  // True when this ring's variables are a prefix of `other`'s.
  bool is_prefix_of(const Ring& other) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

}  // namespace flexalg

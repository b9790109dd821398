#include "flexalg/poly/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "flexalg/error.hpp"

namespace flexalg {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}

Ring::Ring(std::vector<std::string> variables) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_name(v)) throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate variable name '" + v + "'");
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(variables));
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  const auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_->begin());
}

std::size_t Ring::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

Ring Ring::extended(const std::string& name) const {
  auto vars = *vars_;
  vars.push_back(name);
  return Ring(std::move(vars));
}

std::string Ring::fresh_name(std::string_view stem) const {
  std::string candidate(stem);
  for (int i = 1; find(candidate); ++i) candidate = std::string(stem) + "_" + std::to_string(i);
  return candidate;
}

bool Ring::is_prefix_of(const Ring& other) const {
  if (arity() > other.arity()) return false;
  return std::equal(vars_->begin(), vars_->end(), other.vars_->begin());
}

}  // namespace flexalg

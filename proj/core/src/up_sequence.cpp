#include <algorithm>

#include "qcw/reductions.hpp"

namespace qcw {

namespace {

bool is_bits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

}  // namespace

UPSequence::UPSequence(std::string prefix, std::string period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("UPSequence: period must be nonempty");
  if (!is_bits(prefix_) || !is_bits(period_))
    throw std::invalid_argument("UPSequence: prefix and period must be over {0,1}");
  prefix_ones_ = static_cast<std::size_t>(std::count(prefix_.begin(), prefix_.end(), '1'));
  period_ones_ = static_cast<std::size_t>(std::count(period_.begin(), period_.end(), '1'));
}

UPSequence UPSequence::parse(std::string_view literal) {
  const auto semi = literal.find(';');
  if (semi == std::string_view::npos || literal.find(';', semi + 1) != std::string_view::npos)
    throw std::invalid_argument("UPSequence literal must be 'prefix;period', got '" +
                                std::string(literal) + "'");
  return UPSequence(std::string(literal.substr(0, semi)), std::string(literal.substr(semi + 1)));
}

bool UPSequence::at(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n] == '1';
  return period_[(n - prefix_.size()) % period_.size()] == '1';
}

std::size_t k_alpha(const UPSequence& alpha, std::size_t n) {
  const std::size_t p = alpha.prefix_.size();
  if (n <= p)
    return static_cast<std::size_t>(
        std::count(alpha.prefix_.begin(), alpha.prefix_.begin() + static_cast<std::ptrdiff_t>(n), '1'));
  const std::size_t rest = n - p;
  const std::size_t len = alpha.period_.size();
  const std::size_t partial = rest % len;
  return alpha.prefix_ones_ + (rest / len) * alpha.period_ones_ +
         static_cast<std::size_t>(std::count(alpha.period_.begin(),
                                             alpha.period_.begin() + static_cast<std::ptrdiff_t>(partial), '1'));
}

}  // namespace qcw

#pragma once

#include <string>
#include <vector>

namespace growthlab {

/// Eventually periodic sequence of non-negative integers s_1, s_2, ...
///
/// Stored in canonical form (shortest preperiod, then shortest period), so
/// two descriptions of the same sequence compare equal.
class EnumSequence {
 public:
  EnumSequence() : period_{0} {}
  EnumSequence(std::vector<long> preperiod, std::vector<long> period);

  /// (a_1, ..., a_{k-1}, overline a_k): a constant tail.
  static EnumSequence with_constant_tail(std::vector<long> head, long tail);
  /// "1,1,2,3,5,7;8" -> preperiod 1,1,2,3,5,7 and period 8.
  static EnumSequence parse(const std::string& text);

  const std::vector<long>& preperiod() const { return pre_; }
  const std::vector<long>& period() const { return period_; }

  /// 1-based term.
  long operator[](std::size_t n) const;
  std::vector<long> head(std::size_t count) const;

  long max() const;
  /// s_n >= 1 for every n.
  bool positive() const;

  /// "(1,1,2,3,5,7,8bar)" style when the period is a single term,
  /// otherwise "(pre; [period])".
  std::string to_string() const;

  friend bool operator==(const EnumSequence&, const EnumSequence&) = default;

 private:
  void normalise();
  std::vector<long> pre_;
  std::vector<long> period_;
};

}  // namespace growthlab

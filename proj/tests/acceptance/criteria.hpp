#pragma once

#include <cstdint>
#include <sstream>
#include <string>

namespace halgeo::acceptance {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Counts checks and keeps the first failure.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    failures_ += ok ? 0 : 1;
  }
  template <class F>
  void check_lazy(bool ok, F describe) {
    ++checks_;
    if (!ok) {
      if (first_failure_.empty()) first_failure_ = describe();
      ++failures_;
    }
  }
  void bulk(std::uint64_t count, std::uint64_t failed, const std::string& first) {
    checks_ += count;
    if (failed && first_failure_.empty()) first_failure_ = first;
    failures_ += failed;
  }
  std::uint64_t checks() const { return checks_; }
  std::uint64_t failures() const { return failures_; }
  bool ok() const { return failures_ == 0; }

  Outcome outcome(const std::string& summary) const {
    std::ostringstream out;
    out << summary << "; " << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed, first: " << first_failure_;
    return {failures_ == 0, out.str()};
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_failure_;
};

Outcome criterion_1();
Outcome criterion_2();
Outcome criterion_3();
Outcome criterion_4();
Outcome criterion_5();
Outcome criterion_6();
Outcome criterion_7();
Outcome criterion_8();
Outcome criterion_9();
Outcome criterion_10();
Outcome criterion_11();
Outcome criterion_12();

}  // namespace halgeo::acceptance

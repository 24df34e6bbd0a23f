#ifndef MHG_PARAMS_HPP
#define MHG_PARAMS_HPP

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mhg {

/// Admissibility case of a parameter tuple. Numbering starts at II on purpose:
/// it is the numbering of Cherlin's catalogue, where case I is imprimitive.
enum class AdmissibilityCase {
  NotAcceptable,
  AcceptableNotAdmissible,
  CaseIIA,
  CaseIIB,
  CaseIII,
};

inline std::string_view to_string(AdmissibilityCase c) {
  switch (c) {
    case AdmissibilityCase::NotAcceptable: return "NotAcceptable";
    case AdmissibilityCase::AcceptableNotAdmissible: return "AcceptableNotAdmissible";
    case AdmissibilityCase::CaseIIA: return "IIA";
    case AdmissibilityCase::CaseIIB: return "IIB";
    case AdmissibilityCase::CaseIII: return "III";
  }
  return "?";
}

inline bool is_admissible(AdmissibilityCase c) {
  return c == AdmissibilityCase::CaseIIA || c == AdmissibilityCase::CaseIIB ||
         c == AdmissibilityCase::CaseIII;
}

/// Unvalidated (delta, K1, K2, C0, C1) as read from a command line.
struct RawParams {
  int delta = 0;
  int k1 = 0;
  int k2 = 0;
  int c0 = 0;
  int c1 = 0;

  friend bool operator==(const RawParams&, const RawParams&) = default;
  friend auto operator<=>(const RawParams&, const RawParams&) = default;
};

inline bool is_acceptable(const RawParams& p) {
  const auto in_c_range = [&](int c) { return 2 * p.delta + 2 <= c && c <= 3 * p.delta + 2; };
  return p.delta >= 3 && 1 <= p.k1 && p.k1 <= p.k2 && p.k2 <= p.delta &&
         in_c_range(p.c0) && in_c_range(p.c1) && p.c0 % 2 == 0 && p.c1 % 2 != 0;
}

inline AdmissibilityCase classify(const RawParams& p) {
  if (!is_acceptable(p)) return AdmissibilityCase::NotAcceptable;
  const int d = p.delta, k1 = p.k1, k2 = p.k2;
  const int c = std::min(p.c0, p.c1);
  const int cp = std::max(p.c0, p.c1);

  if (c <= 2 * d + k1) {
    const bool group = c == 2 * k1 + 2 * k2 + 1 && k1 + k2 >= d && k1 + 2 * k2 <= 2 * d - 1;
    if (!group) return AdmissibilityCase::AcceptableNotAdmissible;
    if (cp == c + 1) return AdmissibilityCase::CaseIIA;
    if (cp > c + 1 && k1 == k2 && 3 * k2 == 2 * d - 1) return AdmissibilityCase::CaseIIB;
    return AdmissibilityCase::AcceptableNotAdmissible;
  }

  bool ok = k1 + 2 * k2 >= 2 * d - 1 && 3 * k2 >= 2 * d;
  if (k1 + 2 * k2 == 2 * d - 1) ok = ok && c >= 2 * d + k1 + 2;
  if (cp > c + 1) ok = ok && c >= 2 * d + k2;
  return ok ? AdmissibilityCase::CaseIII : AdmissibilityCase::AcceptableNotAdmissible;
}

/// An acceptable parameter tuple. Construction throws std::invalid_argument
/// for tuples that fail acceptability, so holders may rely on the ranges.
class ParameterSequence {
 public:
  explicit ParameterSequence(const RawParams& raw) : raw_(raw), case_(mhg::classify(raw)) {
    if (case_ == AdmissibilityCase::NotAcceptable) {
      throw std::invalid_argument("parameters " + describe(raw) + " are not acceptable");
    }
  }
  ParameterSequence(int delta, int k1, int k2, int c0, int c1)
      : ParameterSequence(RawParams{delta, k1, k2, c0, c1}) {}

  int delta() const { return raw_.delta; }
  int k1() const { return raw_.k1; }
  int k2() const { return raw_.k2; }
  int c0() const { return raw_.c0; }
  int c1() const { return raw_.c1; }
  int c() const { return std::min(raw_.c0, raw_.c1); }
  int c_prime() const { return std::max(raw_.c0, raw_.c1); }
  const RawParams& raw() const { return raw_; }

  AdmissibilityCase admissibility() const { return case_; }
  bool admissible() const { return is_admissible(case_); }
  bool case_ii() const {
    return case_ == AdmissibilityCase::CaseIIA || case_ == AdmissibilityCase::CaseIIB;
  }
  bool case_iib() const { return case_ == AdmissibilityCase::CaseIIB; }
  bool case_iii() const { return case_ == AdmissibilityCase::CaseIII; }
  /// C' = C + 1, i.e. |C0 - C1| = 1.
  bool adjacent_cs() const { return c_prime() == c() + 1; }

  void require_admissible() const {
    if (!admissible()) {
      throw std::invalid_argument("parameters " + describe(raw_) + " are not admissible");
    }
  }

  static std::string describe(const RawParams& r) {
    return "(" + std::to_string(r.delta) + "," + std::to_string(r.k1) + "," +
           std::to_string(r.k2) + "," + std::to_string(r.c0) + "," + std::to_string(r.c1) + ")";
  }
  std::string to_string() const { return describe(raw_); }

  friend bool operator==(const ParameterSequence& a, const ParameterSequence& b) {
    return a.raw_ == b.raw_;
  }
  friend bool operator<(const ParameterSequence& a, const ParameterSequence& b) {
    return a.raw_ < b.raw_;
  }

 private:
  RawParams raw_;
  AdmissibilityCase case_;
};

/// All admissible tuples of diameter `delta` in lexicographic order.
inline std::vector<ParameterSequence> enumerate_admissible(int delta) {
  if (delta < 3) throw std::invalid_argument("delta must be at least 3");
  std::vector<ParameterSequence> out;
  for (int k1 = 1; k1 <= delta; ++k1) {
    for (int k2 = k1; k2 <= delta; ++k2) {
      for (int c0 = 2 * delta + 2; c0 <= 3 * delta + 2; ++c0) {
        if (c0 % 2 != 0) continue;
        for (int c1 = 2 * delta + 3; c1 <= 3 * delta + 2; c1 += 2) {
          const RawParams r{delta, k1, k2, c0, c1};
          if (is_admissible(classify(r))) out.emplace_back(r);
        }
      }
    }
  }
  return out;
}

}  // namespace mhg

#endif  // MHG_PARAMS_HPP

#ifndef SPECTRA_BASE_HPP_
#define SPECTRA_BASE_HPP_

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace spectra {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation would exceed an enumeration cap.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& what) : Error(what) {}
};

class MorphismError : public Error {
 public:
  explicit MorphismError(const std::string& what) : Error(what) {}
};

class IncompatibleFamilyError : public Error {
 public:
  IncompatibleFamilyError(const std::string& what, std::size_t i, std::size_t j)
      : Error(what), first(i), second(j) {}
  std::size_t first, second;
};

class InvalidDiagramError : public Error {
 public:
  explicit InvalidDiagramError(const std::string& what) : Error(what) {}
};

class MalformedCertificateError : public Error {
 public:
  explicit MalformedCertificateError(const std::string& what) : Error(what) {}
};

// Three-valued answer for bounded searches: `Inconclusive` means the bound
// was exhausted, which is never the same as a refutation.
enum class Tri { False, True, Inconclusive };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "inconclusive";
  }
}

// Cooperative cancellation for long searches. A null token never cancels.
class CancelToken {
 public:
  CancelToken() = default;
  void cancel() { flag_.store(true, std::memory_order_relaxed); }
  bool cancelled() const { return flag_.load(std::memory_order_relaxed); }

 private:
  std::atomic<bool> flag_{false};
};

class CancelledError : public Error {
 public:
  CancelledError() : Error("search cancelled") {}
};

inline void check_cancel(const CancelToken* tok) {
  if (tok && tok->cancelled()) throw CancelledError();
}

struct Limits {
  // Valuation enumeration walks 2^n assignments; SPECTRA_MAX_ATOMS overrides.
  static int max_model_atoms() {
    static int cap = [] {
      if (const char* s = std::getenv("SPECTRA_MAX_ATOMS")) {
        int v = std::atoi(s);
        if (v > 0 && v <= 30) return v;
      }
      return 20;
    }();
    return cap;
  }
  // Element-quantifying operations enumerate antichains; Dedekind growth
  // makes anything beyond 5 generators hopeless.
  static constexpr int kMaxElementAtoms = 5;
  // The engine stores atom sets in one machine word.
  static constexpr int kMaxAtoms = 64;
};

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace spectra

#endif  // SPECTRA_BASE_HPP_

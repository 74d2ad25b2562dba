#ifndef INVSEM_REPORT_HPP
#define INVSEM_REPORT_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace invsem {

// Malformed input: bad dimensions, out-of-range indices, unparseable files.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition of an operation is not met (e.g. a table the operation
// needs was not declared). Distinct from a mathematical "no" verdict.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency failure: something a theorem guarantees did not hold.
// Thrown loudly instead of being silently repaired.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Verdict of a check. On failure `witness` holds the lexicographically
// first violating tuple of element indices, so verdicts are reproducible.
struct Report {
  std::string check;
  bool pass = true;
  std::vector<int> witness;
  std::string detail;

  static Report ok(std::string name, std::string note = "") {
    Report r;
    r.check = std::move(name);
    r.pass = true;
    r.detail = std::move(note);
    return r;
  }

  static Report fail(std::string name, std::vector<int> w, std::string note) {
    Report r;
    r.check = std::move(name);
    r.pass = false;
    r.witness = std::move(w);
    r.detail = std::move(note);
    return r;
  }

  explicit operator bool() const { return pass; }
};

}  // namespace invsem

#endif

#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace onsager {

inline constexpr const char* kVersion = "0.1.0";

enum class Status { pass, fail, discrepancy };

std::string to_string(Status s);

struct Check {
  std::string id;
  Status status = Status::pass;
  std::string residual;
  double millis = 0.0;
};

/// Outcome of one verification suite. Overall status is fail iff any check
/// failed, discrepancy if any check disagrees with a published formula
/// without failing, pass otherwise.
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  void set_param(const std::string& key, const std::string& value);
  const std::vector<std::pair<std::string, std::string>>& params() const { return params_; }

  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(std::string id, bool ok, std::string residual = {}) {
    add(Check{std::move(id), ok ? Status::pass : Status::fail, std::move(residual), 0.0});
  }
  /// Runs `f` (returning a Check without timing) and records its wall time.
  template <class F>
  void timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    Check c = f();
    c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    add(std::move(c));
  }
  /// Appends the checks of `other`, prefixing their ids.
  void absorb(const Report& other, const std::string& prefix);

  const std::vector<Check>& checks() const { return checks_; }
  Status status() const;
  bool passed() const { return status() != Status::fail; }
  const Check* find(const std::string& id) const;

  /// Stable schema {suite, status, version, params, checks:[{id, status, residual, millis}]}.
  /// With timing disabled every millis field is 0.
  nlohmann::ordered_json to_json(bool timing = true) const;
  std::string to_text(bool timing = true) const;

 private:
  std::string suite_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<Check> checks_;
};

}  // namespace onsager

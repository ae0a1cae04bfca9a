#include "onsager/report.hpp"

#include <cstdio>
#include <sstream>

namespace onsager {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::discrepancy: return "discrepancy";
  }
  return "fail";
}

void Report::set_param(const std::string& key, const std::string& value) {
  for (auto& [k, v] : params_)
    if (k == key) {
      v = value;
      return;
    }
  params_.emplace_back(key, value);
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    copy.id = prefix + copy.id;
    checks_.push_back(std::move(copy));
  }
}

Status Report::status() const {
  bool discrepancy = false;
  for (const auto& c : checks_) {
    if (c.status == Status::fail) return Status::fail;
    if (c.status == Status::discrepancy) discrepancy = true;
  }
  return discrepancy ? Status::discrepancy : Status::pass;
}

const Check* Report::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

nlohmann::ordered_json Report::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["status"] = to_string(status());
  j["version"] = kVersion;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params_) params[k] = v;
  j["params"] = params;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["status"] = to_string(c.status);
    cj["residual"] = c.residual;
    cj["millis"] = timing ? static_cast<long long>(c.millis + 0.5) : 0LL;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

std::string Report::to_text(bool timing) const {
  std::ostringstream os;
  os << "suite " << suite_ << " (version " << kVersion << "): " << to_string(status()) << '\n';
  for (const auto& [k, v] : params_) os << "  param " << k << " = " << v << '\n';
  for (const auto& c : checks_) {
    os << "  [" << to_string(c.status) << "] " << c.id;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.1f ms)", c.millis);
      os << buf;
    }
    os << '\n';
    if (!c.residual.empty()) {
      std::istringstream lines(c.residual);
      std::string line;
      while (std::getline(lines, line)) os << "      " << line << '\n';
    }
  }
  return os.str();
}

}  // namespace onsager

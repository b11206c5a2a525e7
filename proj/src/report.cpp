#include "sgp/report.hpp"

#include <utility>  // for move

namespace sgp {

  std::string_view status_name(Status s) noexcept {
    switch (s) {
      case Status::pass:
        return "PASS";
      case Status::fail:
        return "FAIL";
      case Status::skipped_precondition:
        return "SKIPPED_PRECONDITION";
    }
    return "UNKNOWN";
  }

  Report::Report(std::string theorem_id, std::string inputs_summary)
      : _theorem_id(std::move(theorem_id)), _inputs(std::move(inputs_summary)) {}

  bool Report::check(std::string name, bool ok, std::string witness) {
    if (!ok) {
      if (witness.empty()) {
        witness = name;
      }
      if (!_witness) {
        _witness = witness;
      }
    }
    _checks.push_back(
        {std::move(name), ok ? Status::pass : Status::fail, ok ? std::string() : witness});
    return ok;
  }

  void Report::skip(std::string name, std::string reason) {
    _checks.push_back({std::move(name), Status::skipped_precondition, std::move(reason)});
  }

  void Report::merge(Report const& other, std::string_view prefix) {
    for (auto const& c : other._checks) {
      std::string name = std::string(prefix) + c.name;
      if (c.status == Status::fail && !_witness) {
        _witness = std::string(prefix) + c.detail;
      }
      _checks.push_back({std::move(name), c.status, c.detail});
    }
  }

  Status Report::status() const noexcept {
    bool any_pass = false;
    for (auto const& c : _checks) {
      if (c.status == Status::fail) {
        return Status::fail;
      }
      any_pass = any_pass || c.status == Status::pass;
    }
    return any_pass ? Status::pass : Status::skipped_precondition;
  }

}  // namespace sgp

#pragma once

#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace sgp {

  enum class Status { pass, fail, skipped_precondition };

  std::string_view status_name(Status s) noexcept;

  // One named assertion inside a report.
  struct Check {
    std::string name;
    Status      status;
    std::string detail;
  };

  // Result of verifying a statement on concrete inputs. A report FAILs as
  // soon as one check fails, and then carries the witness of the first failed
  // check; it PASSes when at least one check passed and none failed. A report
  // whose checks were all skipped is SKIPPED_PRECONDITION.
  class Report {
   public:
    Report(std::string theorem_id, std::string inputs_summary);

    // Records a check; on failure `witness` should name the offending
    // elements, pairs or section.
    bool check(std::string name, bool ok, std::string witness = {});
    void skip(std::string name, std::string reason);

    // Folds the checks of another report in, prefixing their names.
    void merge(Report const& other, std::string_view prefix);

    std::string const& theorem_id() const noexcept {
      return _theorem_id;
    }

    std::string const& inputs_summary() const noexcept {
      return _inputs;
    }

    Status status() const noexcept;

    bool passed() const noexcept {
      return status() == Status::pass;
    }

    std::optional<std::string> const& witness() const noexcept {
      return _witness;
    }

    std::vector<Check> const& checks() const noexcept {
      return _checks;
    }

   private:
    std::string                _theorem_id;
    std::string                _inputs;
    std::vector<Check>         _checks;
    std::optional<std::string> _witness;
  };

}  // namespace sgp

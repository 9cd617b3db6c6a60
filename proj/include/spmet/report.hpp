// Outcome record for a verification check.
#ifndef SPMET_REPORT_HPP
#define SPMET_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace spmet {

struct CheckReport {
  std::string name;
  bool pass = false;
  std::vector<std::string> witnesses;  // nonempty whenever pass is false
  std::string details;
  double seconds = 0.0;

  static CheckReport passed(std::string name, std::string details = "") {
    CheckReport r;
    r.name = std::move(name);
    r.pass = true;
    r.details = std::move(details);
    return r;
  }

  static CheckReport failed(std::string name, std::vector<std::string> witnesses,
                            std::string details = "") {
    if (witnesses.empty())
      throw std::logic_error("CheckReport: failure requires a witness");
    CheckReport r;
    r.name = std::move(name);
    r.pass = false;
    r.witnesses = std::move(witnesses);
    r.details = std::move(details);
    return r;
  }
};

}  // namespace spmet

#endif

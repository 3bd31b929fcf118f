#pragma once

#include <stdexcept>
#include <string>

namespace pano {

// Shape/size/count disagreements between inputs.
class structural_error : public std::runtime_error {
public:
  explicit structural_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Index outside a valid range (frame index, stream index, ...).
class range_error : public std::out_of_range {
public:
  explicit range_error(const std::string& msg) : std::out_of_range(msg) {}
};

// A configuration value outside its admissible domain.
class parameter_error : public std::invalid_argument {
public:
  explicit parameter_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Seam layout cannot be formed (e.g. one coverage mask strictly inside another).
class degenerate_layout_error : public std::runtime_error {
public:
  explicit degenerate_layout_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Region topology unsupported by boundary tracing (holes).
class unsupported_topology_error : public std::runtime_error {
public:
  unsupported_topology_error(const std::string& msg, int holes)
      : std::runtime_error(msg), hole_count(holes) {}
  int hole_count;
};

// A pixel needed by an operation carries no stream data.
class data_unavailable_error : public std::runtime_error {
public:
  explicit data_unavailable_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical degeneracy (singular system, vanishing denominator, ...).
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Manifest / file loading problems.
class load_error : public std::runtime_error {
public:
  explicit load_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pano

#pragma once

#include <stdexcept>
#include <string>

namespace swarmplan {

/// A scalar solver failed to meet its tolerance within the iteration cap.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// More tree vertices were requested than the graph can provide.
class InsufficientVerticesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact solver was handed an instance beyond its enumeration caps.
class InstanceTooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An empirical statistic was requested over zero samples.
class EmptySampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration or input file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swarmplan

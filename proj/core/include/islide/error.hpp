#pragma once

#include <stdexcept>
#include <string>

namespace islide {

enum class ErrorKind {
  InvalidArgument,   // out-of-range parameter or malformed request
  Parse,             // malformed text input
  Capacity,          // more than 64 vertices, or graph6 beyond n = 62
  SetCountCap,       // enumeration aborted at the configured set cap
  InvalidRotation,   // rotation system inconsistent with the graph
  NonSimpleDual,     // face tracing produced a loop or a parallel edge
  NotPlanar,         // rotation system does not describe a sphere embedding
  NotCubic,
  NotConnected,
  NotBipartite,
  NotALineGraph,
  ContainsDiamond,
  NotATriangle,      // deletion target is not a maximal-clique triangle
  Verification,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace islide

#pragma once

#include <functional>
#include <string>

namespace shearcst {

/// Non-fatal numerical warnings (truncation, underflow, unnormalised fiducials).
/// The default handler writes to stderr; tests and the CLI may install their own.
using DiagnosticHandler = std::function<void(const std::string&)>;

void set_diagnostic_handler(DiagnosticHandler handler);
void warn(const std::string& message);

/// Installs a handler for the lifetime of the object and restores the previous one.
class ScopedDiagnosticHandler {
public:
  explicit ScopedDiagnosticHandler(DiagnosticHandler handler);
  ~ScopedDiagnosticHandler();
  ScopedDiagnosticHandler(const ScopedDiagnosticHandler&) = delete;
  ScopedDiagnosticHandler& operator=(const ScopedDiagnosticHandler&) = delete;

private:
  DiagnosticHandler previous_;
};

}  // namespace shearcst

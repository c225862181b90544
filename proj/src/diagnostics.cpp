#include "shearcst/diagnostics.hpp"
#include "shearcst/errors.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace shearcst {

namespace {

std::mutex& handler_mutex() {
  static std::mutex m;
  return m;
}

DiagnosticHandler& handler_slot() {
  static DiagnosticHandler h = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
  return h;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OffGridShift: return "OffGridShift";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::InsufficientSlices: return "InsufficientSlices";
    case ErrorCode::DomainTooNarrow: return "DomainTooNarrow";
    case ErrorCode::SqueezeOutOfRange: return "SqueezeOutOfRange";
    case ErrorCode::KernelDivergent: return "KernelDivergent";
    case ErrorCode::CenterPoint: return "CenterPoint";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

void set_diagnostic_handler(DiagnosticHandler handler) {
  std::lock_guard lock(handler_mutex());
  handler_slot() = std::move(handler);
}

void warn(const std::string& message) {
  std::lock_guard lock(handler_mutex());
  if (handler_slot()) handler_slot()(message);
}

ScopedDiagnosticHandler::ScopedDiagnosticHandler(DiagnosticHandler handler) {
  std::lock_guard lock(handler_mutex());
  previous_ = std::exchange(handler_slot(), std::move(handler));
}

ScopedDiagnosticHandler::~ScopedDiagnosticHandler() {
  std::lock_guard lock(handler_mutex());
  handler_slot() = std::move(previous_);
}

}  // namespace shearcst

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sewkit {

enum class ErrorCode {
  // structural validation
  NonSimplicial,
  BadRidge,
  Disconnected,
  DuplicateFacet,
  TooManyVertices,
  IsolatedVertex,
  UnknownVertex,
  BadParameters,
  // faces and quotients
  NotAFace,
  NotAFacet,
  FaceTooLarge,
  QuotientNotPolytopal,
  SearchTooLarge,
  BadDimension,
  NotNeighbourly,
  // towers and sewing
  NotUniversalAtLevel,
  DuplicateVertex,
  WrongLength,
  TooFewVertices,
  InvalidTower,
  CatalogOrderViolation,
  // files and tooling
  Parse,
  IO,
  OracleMismatch,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSimplicial: return "NonSimplicial";
    case ErrorCode::BadRidge: return "BadRidge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DuplicateFacet: return "DuplicateFacet";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::FaceTooLarge: return "FaceTooLarge";
    case ErrorCode::QuotientNotPolytopal: return "QuotientNotPolytopal";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NotNeighbourly: return "NotNeighbourly";
    case ErrorCode::NotUniversalAtLevel: return "NotUniversalAtLevel";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::InvalidTower: return "InvalidTower";
    case ErrorCode::CatalogOrderViolation: return "CatalogOrderViolation";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::IO: return "IO";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported with one of these.
/// `level()` is only meaningful for NotUniversalAtLevel (1-based tower level).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, int level = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), level_(level) {}

  ErrorCode code() const noexcept { return code_; }
  int level() const noexcept { return level_; }

 private:
  ErrorCode code_;
  int level_;
};

}  // namespace sewkit

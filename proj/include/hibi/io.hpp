#pragma once

// Lattice input and JSON serialization of the toolkit's results.
//
// Input schema, one of
//   {"points": [[i, j], ...]}
//   {"poset": {"elements": [a, ...], "relations": [[a, b], ...]}}
// where poset elements are strings or integers and [a, b] means a < b.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hibi/betti.hpp"
#include "hibi/classifier.hpp"
#include "hibi/fiber.hpp"

namespace hibi {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::optional<std::size_t> offset, std::string pointer)
      : Error(ErrorCode::kParseError, what), offset_(offset), pointer_(std::move(pointer)) {}
  /// Byte offset for malformed JSON.
  std::optional<std::size_t> offset() const { return offset_; }
  /// JSON pointer for schema errors.
  const std::string& pointer() const { return pointer_; }

 private:
  std::optional<std::size_t> offset_;
  std::string pointer_;
};

PlanarLattice parse_lattice(std::string_view text);
/// `path` of "-" reads stdin.
PlanarLattice parse_input(const std::string& path);

Json error_json(const std::exception& e);

Json to_json(Point p);
Json to_json(RankWindow w);
Json to_json(const PlanarLattice& lattice);
/// Summary: size, box, rank, simplicity, join-irreducibles.
Json lattice_summary(const PlanarLattice& lattice);
Json to_json(const Monomial& m, std::span<const Point> variables);
/// {"lead": {"vars": [[[i,j], e], ...]}, "trail": ..., "text": "..."}
Json to_json(const Binomial& b, std::span<const Point> variables);
Json to_json(const GroebnerReport& gb, std::span<const Point> variables, bool with_basis);
Json to_json(const BettiTable& table);
Json to_json(const FiberCertificate& cert);
Json to_json(const ShapeProfile& sp);
Json to_json(const ChordalCertificate& cert);
Json to_json(const WindowVerdict& v);

}  // namespace hibi

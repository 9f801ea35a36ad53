#include "quantoid/classify.hpp"

namespace quantoid {

std::string_view kind_name(Kind kind) noexcept {
  return kind == Kind::polymatroid ? "polymatroid" : "polyquantoid";
}

Kind parse_kind(std::string_view text) {
  if (text == "polymatroid") return Kind::polymatroid;
  if (text == "polyquantoid") return Kind::polyquantoid;
  throw Error(Errc::InvalidArgument, "unknown kind \"" + std::string(text) + "\"");
}

void require_kind(const SetFunction& f, Kind kind) {
  const Classification c = classify(f);
  if (c.is(kind)) return;
  std::string why;
  if (!c.normalized) why = "not normalized";
  else if (!c.submodular) why = "not submodular";
  else if (kind == Kind::polymatroid) why = "not nondecreasing";
  else why = "not complementary";
  throw Error(kind == Kind::polymatroid ? Errc::NotAPolymatroid : Errc::NotAPolyquantoid, why);
}

}  // namespace quantoid

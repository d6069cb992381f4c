#pragma once

#include <map>
#include <string>

#include "simpcat/fincat.hpp"
#include "simpcat/grothendieck.hpp"
#include "simpcat/monoidal.hpp"
#include "simpcat/scat.hpp"

namespace simpcat {

/// The named fixture set shipped with the toolkit. All complexes share the
/// workspace cap.
struct Corpus {
  int cap = 3;
  std::map<std::string, FinCatPtr> fincats;
  std::map<std::string, SCatPtr> scats;
  std::map<std::string, MonSCat> monoidals;
  std::map<std::string, DiagramSCat> diagrams;
  // Deliberately broken inputs for negative tests.
  std::map<std::string, MonSCat> bad_monoidals;

  FinCatPtr fincat(const std::string& name) const;
  SCatPtr scat(const std::string& name) const;
  const MonSCat& monoidal(const std::string& name) const;
  const DiagramSCat& diagram(const std::string& name) const;
};

Corpus corpus(int cap = 3);

/// The arrow-fiber total category with the chosen lift vertex deleted,
/// together with the restricted projection: the documented opfibration
/// counterexample.
struct NoLiftFixture {
  SCatPtr total;
  SFunctor projection;
};
NoLiftFixture no_lift_fixture(int cap);

}  // namespace simpcat

// SUPPLEMENT (not listed): PersonObjectFrameClass names
// EarthBoundObjectFrameClass as a higher class; only its name is known, so
// this is a minimal abstract class.

#include <EverydayObjectDefinitions.h>

ObjectFrameClass "EarthBoundObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "nil" } ) );

  HigherClasses ();

  StructuralParentClassesBase
  (
    { "EverydayObjectStructuralParentClass" }
  );

  RelationshipToParent
  (
    AtLocations ();
    OrientationSpecifiers ();
  );
);

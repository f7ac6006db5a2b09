#include <BasicDefinitions.h>

//-----
//
// "BehavioralStructuralParentClass"
//
//-----
//
ObjectFrameClass "BehavioralStructuralParentClass"
(
  <SealedClass val = "true" />
  //
  <StructureTrait val = "Compound"/>
  <StructuralParentClass val = "true"/>

  Dictionary ( English ({ "nil" }));

  HigherClasses (); // (not used)
  RelationshipToParent (); // (not used)
  AttributeTypes (); // (not used)

  DimensionSystems
  (
    DimensionSystem "RelativePosition" (RelativePosition);
  );

  Structure ();

); // "BehavioralStructuralParentClass"

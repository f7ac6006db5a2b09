#include <EverydayObjectDefinitions.h>

// A portion of IntelligentAgentObjectFrameClass: the attribute types used
// by the behavior classes.

ObjectFrameClass "IntelligentAgentObjectFrameClass"
(
  <StructureTrait val = "Compound"/>
  Dictionary ( English ( { "nil" } ) );
  HigherClasses ();

  StructuralParentClassesBase
  (
    { "EverydayObjectStructuralParentClass" }
  );

  AttributeTypes
  (
    AttributeType "CommunicatingState"
    (
      <SuperType val = "Qualitative"/>
      "Values"
      (
        { "Communicating",
          "CommunicatingCompleted" }
      );
    );
    AttributeType "AnticipatingHarmfulEventState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />
      <OptionalCausalFeature val = "true" />

      "Values"
      (
        {
          "NotAnticipating",
          "Anticipating"
        }
      );
    );
    AttributeType "AnticipatingScheduleConflictState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true" />
      <OptionalCausalFeature val = "true" />

      "Values"
      (
        {
          "NotAnticipating",
          "Anticipating"
        }
      );
    );
  ); // AttributeTypes
); // IntelligentAgentObjectFrameClass

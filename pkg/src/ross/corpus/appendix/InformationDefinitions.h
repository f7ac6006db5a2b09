// SUPPLEMENT (not listed): object frame classes and attribute types that the
// Winograd behavior classes reference but that have no listing of their own.

#include <EverydayObjectDefinitions.h>

AttributeType "CommunicationReceivedState"
(
  <SuperType val = "Qualitative"/>
  <StateAttributeType val = "true"/>

  "Values"
  (
    { "NotCommunicationReceived",
      "CommunicationReceived" }
  );
);

ObjectFrameClass "CognitiveRepresentationOfHarmfulEvent"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "harm", "harms" } ) );

  HigherClasses ( { "EverydayObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "PassiveIsAnticipatedState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true"/>

      "Values"
      (
        { "NotAnticipated",
          "Anticipated" }
      );
    );
  );
);

ObjectFrameClass "CognitiveRepresentationOfScheduleConflict"
(
  <StructureTrait val = "Compound"/>

  DictionaryPriorWord
  (
    <DictionaryWordsIsNoun val = "true" />
    English ( { "schedule", "schedule" } );
  );

  Dictionary ( English ( { "conflict", "conflicts" } ) );

  HigherClasses ( { "EverydayObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "PassiveIsAnticipatedState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true"/>

      "Values"
      (
        { "NotAnticipated",
          "Anticipated" }
      );
    );
  );
);

ObjectFrameClass "CommunicationUnitRequestObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "permit", "permits", "request", "requests" } ) );

  HigherClasses ( { "EverydayObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "PassiveRepresentedItemsRefusedState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true"/>

      "Values"
      (
        { "NotRefused",
          "Refused" }
      );
    );
  );
);

ObjectFrameClass "CommunicationUnitProposedActionObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "violence", "violence" } ) );

  HigherClasses ( { "EverydayObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "PassiveIsCommunicatedState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true"/>

      "Values"
      (
        { "NotCommunicated",
          "Communicated" }
      );
    );
  );
);

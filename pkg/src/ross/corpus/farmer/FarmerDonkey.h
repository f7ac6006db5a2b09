// The farmer and donkey example: object frame classes, FarmerBeatsDonkey
// and PersonTriesToKillAnimal, plus supplied definitions they depend on.

#include <PersonClasses.h>
#include <BehavioralDefinitions.h>

//-----
// SUPPLEMENT (not listed): attribute types that the kill and ownership
// behaviors reference but that are "not shown here".
//-----

AttributeType "AttemptingToKillState"
(
  <SuperType val = "Qualitative"/>
  <StateAttributeType val = "true" />
  "Values" ( { "NotAttemptingToKill", "AttemptingToKill" } );
);

AttributeType "PassiveIsKilledState"
(
  <SuperType val = "Qualitative"/>
  <StateAttributeType val = "true" />
  "Values" ( { "NotIsKilled", "IsKilled" } );
);

AttributeType "OwningState"
(
  <SuperType val = "Qualitative"/>
  <StateAttributeType val = "true" />
  "Values" ( { "NotOwning", "Owning" } );
);

AttributeType "PassiveIsOwnedState"
(
  <SuperType val = "Qualitative"/>
  <StateAttributeType val = "true" />
  "Values" ( { "NotOwned", "Owned" } );
);

//-----
// SUPPLEMENT (not listed): the animal higher class.
//-----

ObjectFrameClass "AnimalObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "animal", "animals" } ) );

  HigherClasses ( { "EverydayObjectFrameClass" } );
);

//-----
// Object frame classes
//-----

ObjectFrameClass "FarmerObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
  (
    { "farmer", // singular
      "farmers" } // plural
  ););

  HigherClasses ( { "PersonObjectFrameClass" });

  AttributeTypes
  (
    AttributeType "BeatingState"
    (
      <SuperType val = "Qualitative"/>

      <StateAttributeType val = "true" />

      "Values"
      (
        {
          "NotBeating",
          "Beating"
        }
      );
    );
  );
);

ObjectFrameClass "DonkeyObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
  (
    { "donkey",
      "donkeys" }
  ));

  HigherClasses ( { "AnimalObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "PassiveIsBeatenState"
    (
      <SuperType val = "Qualitative"/>

      <StateAttributeType val = "true" />

      "Values"
      (
        {
          "NotBeaten",
          "Beaten"
        }
      );
    );
  );
);

//-----
// SUPPLEMENT (not listed): the ownership behavior that FarmerBeatsDonkey
// names as its nested behavior.
//-----

BehaviorClass "ActiveOwnershipBehaviorClass"
(
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary ( English ( { "own", "owned", "owned", "owns", "owning" } ) );

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = OwningState val = "Owning" />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = AnimalObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsOwnedState val = "Owned" />
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = a$ />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = OwningState val = "Owning" />
    );
    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = AnimalObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsOwnedState val = "Owned" />
    );
  );
);

//-----
// Behavior classes
//-----

BehaviorClass "FarmerBeatsDonkeyBehaviorClass"
(
  <CausalRule val = "true" />

  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary ( English
  (
    {
      "beat",
      "beat",
      "beaten",
      "beats",
      "beating"
    }
  ););

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = FarmerObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = BeatingState val = "NotBeating" />
      <Attribute ref = UniqueIdentityAttributeType var = q$ />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = DonkeyObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsBeatenState val = "NotBeaten" />
    );
    BehaviorClassReference
    (
      <BehaviorClass ref = ActiveOwnershipBehaviorClass /> // DEFINED-BEHAVIOR-CLASS --->
      <ParameterActor ref = FarmerObjectFrameClass expr = q$ />
      <ParameterActee ref = DonkeyObjectFrameClass />
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = FarmerObjectFrameClass />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = BeatingState val = "Beating" />
    );
    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = DonkeyObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsBeatenState val = "Beaten" />
    );
  );
); // FarmerBeatsDonkeyBehaviorClass

BehaviorClass "PersonTriesToKillAnimalBehaviorClass"
(
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary ( English
  (
    {
      "kill", "kill", "killed", "kills", "killing"
    }
  ););

  Modification
  (
    DictionaryModifyingVerbs
    (
      English
      (
        {
          "try" // infinitive
        }
      );
    );
    //DictionaryAdverbs
    //(
    //English
    //(
    // {
    //   "quickly"
    // }
    // );
    //);
  );

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = FarmerObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = AttemptingToKillState val = "AttemptingToKill" />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = AnimalObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsKilledState val = "NotIsKilled" />
    );
  );

  PostStates
  (
    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = AnimalObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsKilledState val = "NotIsKilled" />
    );
  );
); // PersonTriesToKillAnimalBehaviorClass

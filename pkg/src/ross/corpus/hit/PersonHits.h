//-----
// "A young man hit the boy": person classes, the hitting behavior and the
// definitions they depend on.
//-----

#include <EarthboundObjectDefinitions.h>
#include <BehavioralDefinitions.h>

AttributeType "PersonAge"
(
    <SuperType val = "Qualitative"/>

    "Values"
    (
        { "Infantile" : Dictionary ( English ( { "infant" } ) ); ,
        "YoungChild" : Dictionary ( English ( { "young" } ) ); ,
        "Child" : Dictionary ( English ( { "young" } ) ); ,
        "Teenager" : Dictionary ( English ( { "teenage" } ) ); ,
        "Adult" : Dictionary ( English ( { "adult" } ) ); ,
        "MiddleAgedAdult" : Dictionary ( English ( { "middle-aged", "adult" } ) ); ,
        "AdvancedAgedAdult" : Dictionary ( English ( { "elderly", "senior", "older", "old" } ) ); }
    );
);

AttributeType "WalkingState"
(
    <SuperType val = "Qualitative"/>
    <StateAttributeType val = "true"/>

    "Values"
    (
        { "NotWalking",
          "Walking"
        }
    );
);

ObjectFrameClass "PersonObjectFrameClass"
(
  <SealedClass val = "false" /> // (the default)

  <StructureTrait val = "Compound"/>

  <StructuralParentClass val = "false"/> // (the default)

  Dictionary
  (
    English
    (
      { "person", "persons", "human", "humans" }
    );
  );

  HigherClasses
  (
    { "EverydayObjectFrameClass",
      "EarthBoundObjectFrameClass" } // provides orientation specifiers, e.g. "above", "below"
  );

  // SUPPLEMENT (not listed): the two state attribute types written by the
  // hitting behavior. Hitting is a caused state, so it is an optional causal
  // feature and does not survive into the next time point.
  AttributeTypes
  (
    AttributeType "HittingState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true"/>
      <OptionalCausalFeature val = "true"/>
      "Values" ( { "NotHitting", "Hitting" } );
    );
    AttributeType "PassiveHitState"
    (
      <SuperType val = "Qualitative"/>
      <StateAttributeType val = "true"/>
      "Values" ( { "NotHit", "Hit" } );
    );
  );

  BehaviorsPotentialSection
  (
    BehaviorClassDesignator
    (
      <BehaviorClassName val = "PersonWalksBehaviorClass" />

      // Note: this represents the probability that a given person *can* walk:
      //
      <Probability expr = 0.94 />
    );
  );
);

// SUPPLEMENT (not listed): the lower classes named in the instance model.
ObjectFrameClass "ManObjectFrameClass"
(
  <StructureTrait val = "Compound"/>
  Dictionary ( English ( { "man", "men" } ) );
  HigherClasses ( { "PersonObjectFrameClass" } );
);

ObjectFrameClass "BoyObjectFrameClass"
(
  <StructureTrait val = "Compound"/>
  Dictionary ( English ( { "boy", "boys" } ) );
  HigherClasses ( { "PersonObjectFrameClass" } );
);

// SUPPLEMENT (not listed): the walking behavior named as a potential behavior.
BehaviorClass "PersonWalksBehaviorClass"
(
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary ( English ( { "walk", "walked", "walked", "walks", "walking" } ) );

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = WalkingState val = "NotWalking" />
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = WalkingState val = "Walking" />
    );
  );
);

//-----
//
// BehaviorClass: PersonHitsPerson
//
//   E.g.: "The man hit the woman."
//
//   Before:
//     Man-1 hits
//     Woman-1 not yet hit (by Man-1).
//   After:
//     Woman-1 has been hit.
//
//-----
//
BehaviorClass "PersonHitsPerson"
(
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary
  (
    English
    (
      { "hit", // (infinitive/base)
        "hit", // (simple past)
        "hit", // (past participle)
        "hits", // (simple present, 3rd p.s.)
        "hitting", // (present participle)

        "punch",
        "punched",
        "punched",
        "punches",
        "punching"
      }
    );
  ); // (the page break repeats the closing parentheses; one set is kept)

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor" // (name is descriptive only)
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = x$ />
      <Attribute ref = RelativeTime var = t$ />
      <Attribute ref = HittingState val = "Hitting" />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (x$+1) />
      <Attribute ref = RelativeTime expr = t$ />
      <Attribute ref = PassiveHitState val = "NotHit" />
      <Attribute ref = UniqueIdentityAttributeType var = q$ /> // Identity
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (x$+1) />
      <Attribute ref = RelativeTime expr = (t$+1) />
      <Attribute ref = PassiveHitState val = "Hit" />
      <Attribute ref = UniqueIdentityAttributeType expr = q$ /> // Identity
    );
  );
); // BehaviorClass "PersonHitsPerson"

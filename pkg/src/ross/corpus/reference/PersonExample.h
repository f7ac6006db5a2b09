//-----
// A rudimentary person class with attribute types, class attributes,
// structure children and a potential behavior.
//-----

#include <EarthboundObjectDefinitions.h>
#include <BehavioralDefinitions.h>

// SUPPLEMENT (not listed): the attribute types named by the Attributes section.
AttributeType "MaterialCompositionAttributeType"
(
  <SuperType val = "Qualitative"/>
  "Values" ( { "Organic", "Inorganic" } );
);

AttributeType "BodyWeightAttributeType"
(
  <SuperType val = "Qualitative"/>
  "ValueSet" ( <SuperTypeUsage val = "QualitativeValues" /> { 0 .. 1000 } );
);

// SUPPLEMENT (not listed): the walking behavior named as a potential behavior.
AttributeType "WalkingState"
(
    <SuperType val = "Qualitative"/>
    <StateAttributeType val = "true"/>
    "Values" ( { "NotWalking", "Walking" } );
);

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

ObjectFrameClass "PersonObjectFrameClass"
(
  <SealedClass val = "false" /> // (the default)

  <StructureTrait val = "Compound"/> // ("Compound" since it has a Structure section, below)

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

  // (the following is not needed since it is gotten via the inheritance hierarchy)
  // StructuralParentClassesBase
  // (



// { "EverydayObjectStructuralParentClass" }
// );

// (when the RelationshipToParent section is absent, instances of the class can be instantiated and
// attached to a structural parent instance, but the location and size attributes cannot be set)
//
// RelationshipToParent

AttributeTypes
(
  AttributeType "PersonAge"
  (
    <SuperType val = "Qualitative"/>

    "Values"
    (
      { "Infantile" : Dictionary ( English ( { "infant" } ) ); ,
        "Child" : Dictionary ( English ( { "young" } ) ); ,
        "Teenager" : Dictionary ( English ( { "teenage" } ) ); ,
        "Adult" : Dictionary ( English ( { "adult" } ) ); ,
        "MiddleAgedAdult" : Dictionary ( English ( { "middle-aged", "adult" } ) ); ,
        "AdvancedAgedAdult" : Dictionary ( English ( { "elderly", "senior", "older", "old" } ) ); ;
      }
    );
  );
);

// (when this is absent, the components of the person class must use the dimension system(s)
// of the structural parent classes for the person class).
//
// DimensionSystems

AttributesSection
(
  Attribute "MaterialComposition"
  (
    <Attribute ref = MaterialCompositionAttributeType val = "Organic" />
  );
  Attribute "BodyWeight"
  (
    <Probability expr = 0.90 />
    <Attribute ref = BodyWeightAttributeType range = { 120 .. 220 } />
  );
);

Structure
(
  ObjectFrameClass "PersonHeadObjectFrameClass"
  (
    <ProbabilityInStructuralParent expr = 0.99999 />
  );
  ObjectFrameClass "PersonLeftArmObjectFrameClass"
  (
    <ProbabilityInStructuralParent expr = 0.989 />
  );
  ObjectFrameClass "PersonRightArmObjectFrameClass"
  (
    <ProbabilityInStructuralParent expr = 0.989 />
  );

// (other components here)
); // (a duplicated closing parenthesis at the page break is dropped)

BehaviorsPotentialSection
(
  BehaviorClassDesignator // (a person can walk)
  (
    <BehaviorClassName val = "PersonWalksBehaviorClass" />
    <Probability expr = 0.8 />
  );
);

); // "PersonObjectFrameClass"

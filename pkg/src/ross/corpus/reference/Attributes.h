//-----
// Attribute statements inside class Attributes sections.
//-----

#include <EverydayObjectDefinitions.h>

// SUPPLEMENT (not listed): body weight in pounds.
AttributeType "BodyWeightAttributeType"
(
  <SuperType val = "Qualitative"/>
  "ValueSet" ( <SuperTypeUsage val = "QualitativeValues" /> { 0 .. 1000 } );
);

// SUPPLEMENT (not listed): host class for the basic form.
ObjectFrameClass "WeighedPersonObjectFrameClass"
(
  <StructureTrait val = "Compound"/>
  Dictionary ( English ( { "nil" } ) );
  HigherClasses ( { "EverydayObjectFrameClass" } );

  Attributes
  (
    Attribute "BodyWeight"
    (
      <Attribute ref = BodyWeightAttributeType range = { 0 .. 800 } />
    );
  );
);

// SUPPLEMENT (not listed): host class for the probability variation.
ObjectFrameClass "TypicalPersonObjectFrameClass"
(
  <StructureTrait val = "Compound"/>
  Dictionary ( English ( { "nil" } ) );
  HigherClasses ( { "EverydayObjectFrameClass" } );

  Attributes
  (
    Attribute "BodyWeight"
    (
      <Probability expr = 0.96 />

      <Attribute ref = BodyWeightAttributeType range = { 20 .. 250 } />
    );
  );
);

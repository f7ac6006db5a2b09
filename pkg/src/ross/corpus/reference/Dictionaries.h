//-----
// Dictionary expression listings: attribute-value dictionaries, noun and
// verb word lists, and a DictionaryPriorWord two-word term.
//-----

#include <BehavioralDefinitions.h>

AttributeType "VehicleExteriorColor"
(
<SuperType val = "QualityAttributeType"/>

"Values"
(
{ "Black": Dictionary
  ( English
    ( { "black", "charcoal" } ); ),
"Blue": Dictionary
  ( English
    ( { "blue" } ); ),
"Silver": Dictionary
  ( English
    ( { "silver", "grey" } ); ),
"White": Dictionary
  ( English
    ( { "white", "opal" } ); );
}
);
);

// SUPPLEMENT (not listed): a value set to hold the unrestricted word list (1).
ValueSet "ColorValueSet"
(
  <SuperTypeUsage val = "QualitativeValues" />
  {
    "ColorBlue" : Dictionary ( English ( { "blue", "turquoise" } ) );
  }
);

// SUPPLEMENT (not listed): host class for the noun word list (2).
ObjectFrameClass "PersonObjectFrameClass"
(
    <StructureTrait val = "Compound"/>

    Dictionary
    (
        English
        (
            {
                "person",
                "persons",
                "human",
                "humans"
            }
        );
    );
);

// SUPPLEMENT (not listed): host behavior class for the verb word list (3).
BehaviorClass "PersonHitsBehaviorClass"
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
    );

    PriorStates ();
    PostStates ();
);

// SUPPLEMENT (not listed): host class for the two-word term (4).
ObjectFrameClass "StereoSystemObjectFrameClass"
(
<StructureTrait val = "Compound"/>

DictionaryPriorWord ( English
(
  {
    "stereo",
    "stereos" // (plural since it is a noun)
  }
));

Dictionary ( English
(
  {
    "system",
    "systems"
  }
));
);

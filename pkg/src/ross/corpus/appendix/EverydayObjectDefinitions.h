//-----
//
// File: EverydayObjectDefinitions.h
//
// Description:
//
// Classes and definitions for "everyday objects", defined as
// objects that are on a scale that allows them to be perceived
// by and interacted with by human beings or animals.
//
//-----

#include <BasicDefinitions.h>

//-----
//
// EverydayObjectTimelineDimensionSystem
//
//-----
//
DimensionSystem "EverydayObjectTimelineDimensionSystem"
(
  LocationAttributeTypes
  (
    TemporalAttributeTypes
    (
      "Time" // Values for a timeline that is useful for
             // simple situations involving everyday objects
      (
        <SuperType val = "Locational"/>

        "ValueSet"
        (
          <SuperTypeUsage val = "LocationalValues" />

          // Note: if OrderedCollection is true, the processing system
          //   must implement the equality operators: ==, !=,
          //   and the relational operators: <, >, <=, >=.
          //
          //   The default value is "false" for value sets
          //   that are enumerated lists of values.
          //
          <OrderedCollection val = "true" />

          { "T01", "T02", "T03", "T04", "T05", "T06", "T07", "T08",
            "T09", "T10", "T11", "T12", "T13", "T14", "T15", "T16",
            "T17", "T18", "T19", "T20", "T21", "T22", "T23", "T24",
            "T25", "T26", "T27", "T28", "T29", "T30" }
        );
      );
    );
  );
); // DimensionSystem "EverydayObjectTimelineDimensionSystem"

//-----
//
// EverydayObjectStructuralParentClass
//
//-----
//
ObjectFrameClass "EverydayObjectStructuralParentClass"
(
  <StructureTrait val = "Compound"/>
  <StructuralParentClass val = "true"/>

  Dictionary ( English ( { "nil" } ) );

  HigherClasses (); // (not used)
  RelationshipToParent (); // (not used)
  AttributeTypes (); // (not used)

  DimensionSystems
  (
    DimensionSystem "EverydayObjectDimensionSystem"
    (
      Merge (PhysicalObjectMillimeterCoordinates, EverydayObjectTimelineDimensionSystem);
    );
  );
); // EverydayObjectStructuralParentClass

//-----
//
// EverydayObjectFrameClass
//
//-----
//
ObjectFrameClass "EverydayObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  // (note: no dictionary entries needed here since this is used
  // solely as an abstract class)
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
    OuterDimensionSystemExtents ();
  );

  AttributeTypes
  (
    AttributeType "MainColor"
    (
      <SuperType val = "Qualitative"/>

      "Values"
      (
        // (some sample colors)
        { "White" : Dictionary ( English ( { "white" } ) ); ,
          "Red" : Dictionary ( English ( { "red" } ) ); ,
          "Yellow" : Dictionary ( English ( { "yellow" } ) ); ,
          "Blue" : Dictionary ( English ( { "blue" } ) ); ,
          "Green" : Dictionary ( English ( { "green" } ) ); ,
          "Orange" : Dictionary ( English ( { "orange" } ) ); ,
          "Purple" : Dictionary ( English ( { "purple" } ) ); ,
          "Brown" : Dictionary ( English ( { "brown" } ) ); ,
          "Black" : Dictionary ( English ( { "black" } ) );
        }
      );
    );
  );

  Structure ();

); // EverydayObjectFrameClass

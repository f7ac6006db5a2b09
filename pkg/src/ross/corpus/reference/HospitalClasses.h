//-----
// Two classes that share the noun "resident" and carry attribute type
// probabilities.
//-----

#include <PersonClasses.h>

ObjectFrameClass "HospitalResidentDoctorObjectFrameClass" // a resident doctor
(
  <StructureTrait val = "Compound"/>
  Dictionary ( English
    (
      { "resident",
        "residents" }
    ) );
  HigherClasses ( { "PersonObjectFrameClass" } );

  AttributeTypes
  (
    AttributeType "AttributeTypeOnDutyState"
    (
      <Probability expr = 0.8 />
      <SuperType val = "Qualitative"/>

      "Values"
      (
        {
          "NotOnDuty",
          "OnDuty" : Dictionary ( English ( { "active" } ) );
        }
      );
    );

    AttributeType "AttributeTypeIllnessState"
    (
      <Probability expr = 0.01 />
      <SuperType val = "Qualitative"/>

      "Values"
      (
        {
          "NotIll",
          "Ill" : Dictionary ( English ( { "sick" } ) );
        }
      );
    );
  );
); // ObjectFrameClass "HospitalResidentDoctorObjectFrameClass"

ObjectFrameClass "HospitalResidentPatientObjectFrameClass" // a resident patient
(
  <StructureTrait val = "Compound"/>
  Dictionary ( English
    (
      { "resident",
        "residents" }
    ) );
  HigherClasses ( { "PersonObjectFrameClass" } );

  AttributeTypes
(
  AttributeType "AttributeTypeIllnessState"
  (
    <Probability expr = 0.9 />
    <SuperType val = "Qualitative"/>

    "Values"
    (
      {
        "NotIll",
        "Ill" : Dictionary ( English ( { "sick" } ) );
      }
    );
  );
);

); // ObjectFrameClass "HospitalResidentPatientObjectFrameClass"

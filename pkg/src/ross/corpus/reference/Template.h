//-----
// A template class for an animal head. Templates are parsed and compiled
// but never rendered.
//-----

#include <EverydayObjectDefinitions.h>

// SUPPLEMENT (not listed): the animal class with a head component, its
// component coordinates and a physical composition specification system.
DimensionSystem "AnimalComponentMillimeterCoordinates" (PhysicalObjectMillimeterCoordinates);

ObjectFrameClass "AnimalObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English ( { "animal", "animals" } ) );

  HigherClasses ( { "EverydayObjectFrameClass" } );

  SpecificationSystems
  (
    SpecificationSystem "AnimalComponentPhysicalComposition"
    (
      DimensionSystem "AnimalComponentCoordinates" (AnimalComponentMillimeterCoordinates);

      InnerContent
      (
        QualityAttributeTypes
        (
          "EssentialValueType"
          (
            <SuperType val = "Qualitative"/>
            "ValueSet" ( StringLiteral );
          );
        );
      );
    );
  );

  Structure
  (
    ObjectFrameClass "HeadObjectFrameClass"
    (
      <StructureTrait val = "Range"/>
      Dictionary ( English ( { "head", "heads" } ) );
    );
  );
);



TemplateObjectClass "AnimalHead_Template001"
(
  <StructuralParentClass ref = AnimalObjectFrameClass />
  <ObjectFrameClass ref = AnimalObjectFrameClass.HeadObjectFrameClass />
  <ShapeTemplate val = "false" />

  // TwoPartAttributeCluster:
  <SpecificationSystem ref = AnimalComponentPhysicalComposition />
  <Attribute ref = X-Coordinate var = x$ />
  <Attribute ref = Y-Coordinate var = y$ />
  <Attribute ref = Z-Coordinate var = z$ />
  <Attribute ref = EssentialValueType routine = "RenderAnimalHead" />
  //<Attribute ref = EssentialValueType bitmap = "AnimalHead3D" />

  OuterDimensionSystemExtentSet
  (
    <DimensionSystem ref = AnimalComponentMillimeterCoordinates />



    <Attribute ref = X-Coordinate val = "700" />
    <Attribute ref = Y-Coordinate val = "700" />
    <Attribute ref = Z-Coordinate val = "700" />
  );
);

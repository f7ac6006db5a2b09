#include <BehavioralDefinitions.h>
#include <PersonClasses.h>
#include <InformationDefinitions.h>

//-----
//
// BehaviorClass: AnticipateHarmfulEventBehaviorClass
//
// "A person can anticipate a harmful event."
//
//-----
//
BehaviorClass "AnticipateHarmfulEventBehaviorClass"
(
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary ( English
  (
    {
      "anticipate",
      "anticipated",
      "anticipated",
      "anticipates",
      "anticipating",
      "fear",
      "feared",
      "feared",
      "fears",
      "fearing"
    }
  ););

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = AnticipatingHarmfulEventState val = "NotAnticipating" />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = CognitiveRepresentationOfHarmfulEvent />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsAnticipatedState val = "NotAnticipated" />
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
      <Attribute ref = AnticipatingHarmfulEventState val = "Anticipating" />
    );
    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = CognitiveRepresentationOfHarmfulEvent />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsAnticipatedState val = "Anticipated" />
    );
  );
); // BehaviorClass "AnticipateHarmfulEventBehaviorClass"

//-----
//
// BehaviorClass: AnticipateScheduleConflictBehaviorClass
//
// "A person can anticipate a schedule conflict."
//
//-----
//
BehaviorClass "AnticipateScheduleConflictBehaviorClass"
(
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary ( English
  (
    {
      "anticipate",
      "anticipated",
      "anticipated",
      "anticipates",
      "anticipating"
    }
  ););

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = AnticipatingScheduleConflictState val = "NotAnticipating" />
    );
    PopulatedObjectClass "AntecedentActee"
    (
      <ObjectFrameClass ref = CognitiveRepresentationOfScheduleConflict />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsAnticipatedState val = "NotAnticipated" />
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
      <Attribute ref = AnticipatingScheduleConflictState val = "Anticipating" />
    );
    PopulatedObjectClass "ConsequentActee"
    (
      <ObjectFrameClass ref = CognitiveRepresentationOfScheduleConflict />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsAnticipatedState val = "Anticipated" />
    );
  );
); // BehaviorClass "AnticipateScheduleConflictBehaviorClass"

//-----
//
// BehaviorClass: "RefusingSomethingDueToFearBehaviorClass"
//
// "If a person(s) anticipates a harmful event
// then he/she/they will not grant a thing that was requested (e.g. a permit request)."
//
//-----
//
BehaviorClass "RefusingSomethingDueToFearBehaviorClass"
(
  <CausalRule val = "true" />

  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  DictionaryPriorWord ( English
  (
    { "", "", "", "", "",
      "not", "not", "not", "not", "not" }
  ));

  Dictionary ( English
  (
    { "refuse", "refused", "refused", "refuses", "refusing",
      "grant", "granted", "granted", "grants", "granting" }
  ));

  PriorStates // (antecedent)
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass /> // e.g. government official(s)
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = RefusingState val = "NotRefusing" />
      <Attribute ref = UniqueIdentityAttributeType var = q$ />
    );
    BehaviorClassReference // ("if a person anticipates a harmful event")
    (
      <Probability expr = 0.9 />
      <BehaviorClass ref = AnticipateHarmfulEventBehaviorClass />
      <ParameterActor ref = PersonObjectFrameClass expr = q$ /> // (refers to the actor)
      <ParameterActee ref = CognitiveRepresentationOfHarmfulEvent />
    );
    PopulatedObjectClass "AntecedentActee" // e.g. demonstrators
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsRefusedState val = "NotRefused" />
    );
    PopulatedObjectClass "AntecedentExtra"
    (
      <ObjectFrameClass ref = CommunicationUnitRequestObjectFrameClass /> // e.g. the permit
      <ExtraParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+2) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveRepresentedItemsRefusedState val = "NotRefused" />
    );
  );
  PostStates // (consequent)
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass /> // e.g. government official(s)
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = a$ />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = RefusingState val = "Refusing" />
    );
    PopulatedObjectClass "ConsequentActee" // e.g. demonstrators
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsRefusedState val = "Refused" />
    );
    PopulatedObjectClass "ConsequentExtra"
    (
      <ObjectFrameClass ref = CommunicationUnitRequestObjectFrameClass /> // e.g. the permit
      <ExtraParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+2) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveRepresentedItemsRefusedState val = "Refused" />
    );
  );
); // BehaviorClass "RefusingSomethingDueToFearBehaviorClass"

//-----
//
// BehaviorClass: "RefusingSomethingDueToFearOnPartOfRequestorBehaviorClass"
//
// "If a first person is requested something from
// someone who anticipates a harmful event,
// then the first person does not grant the thing that was requested."
//
// (For testing: included to test probability)
//
//-----
//
BehaviorClass "RefusingSomethingDueToFearOnPartOfRequestorBehaviorClass"
(
  <CausalRule val = "true" />

  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  // <Negation val = "true" />

  DictionaryPriorWord ( English
  (
    { "", "", "", "", "",
      "not", "not", "not", "not", "not" }
  ););

  Dictionary ( English
  (
    { "refuse", "refused", "refused", "refuses", "refusing",
      "grant", "granted", "granted", "grants", "granting" }
  ););

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass /> // e.g. government official(s)
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = RefusingState val = "NotRefusing" />
    );
    BehaviorClassReference
    (
      <BehaviorClass ref = AnticipateHarmfulEventBehaviorClass />
      <Probability expr = 0.02 />
      <ParameterActor ref = PersonObjectFrameClass expr = q$ /> // (refers to the actee)
      <ParameterActee ref = CognitiveRepresentationOfHarmfulEvent />
    );
    PopulatedObjectClass "AntecedentActee" // e.g. demonstrators
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsRefusedState val = "NotRefused" />
      <Attribute ref = UniqueIdentityAttributeType var = q$ />
    );
    PopulatedObjectClass "AntecedentExtra"
    (
      <ObjectFrameClass ref = CommunicationUnitRequestObjectFrameClass /> // e.g. the permit
      <ExtraParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+2) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveRepresentedItemsRefusedState val = "NotRefused" />
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass /> // e.g. government official(s)
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = a$ />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = RefusingState val = "Refusing" />
    );
    PopulatedObjectClass "ConsequentActee" // e.g. demonstrators
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsRefusedState val = "Refused" />
    );
    PopulatedObjectClass "ConsequentExtra"
    (
      <ObjectFrameClass ref = CommunicationUnitRequestObjectFrameClass /> // e.g. the permit
      <ExtraParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+2) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveRepresentedItemsRefusedState val = "Refused" />
    );
  );
); // BehaviorClass "RefusingSomethingDueToFearOnPartOfRequestorBehaviorClass"

//-----
//
// BehaviorClass: "RefusingSomethingDueToScheduleConflictBehaviorClass"
//
// "If a person(s) anticipates a schedule conflict
// then he/she/they will not grant a thing that was requested (e.g. a permit request)."
//
//-----
//
BehaviorClass "RefusingSomethingDueToScheduleConflictBehaviorClass"
(
  <CausalRule val = "true" />

  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  DictionaryPriorWord ( English
  (
    { "", "", "", "", "",
      "not", "not", "not", "not", "not" }
  ););

  Dictionary ( English
  (
    { "refuse", "refused", "refused", "refuses", "refusing",
      "grant", "granted", "granted", "grants", "granting" }
  ));

  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass /> // e.g. government official(s)
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = RefusingState val = "NotRefusing" />
      <Attribute ref = UniqueIdentityAttributeType var = q$ />
    );
    BehaviorClassReference
    (
      <BehaviorClass ref = AnticipateScheduleConflictBehaviorClass /> // NESTED-BEHAVIOR-->>
      <ParameterActor ref = PersonObjectFrameClass expr = q$ />
      <ParameterActee ref = CognitiveRepresentationOfScheduleConflict />
    );
    PopulatedObjectClass "AntecedentActee" // e.g. demonstrators
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsRefusedState val = "NotRefused" />
    );
    PopulatedObjectClass "AntecedentExtra"
    (
      <ObjectFrameClass ref = CommunicationUnitRequestObjectFrameClass /> // e.g. a permit
      <ExtraParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+2) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveRepresentedItemsRefusedState val = "NotRefused" />
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = PersonObjectFrameClass /> // e.g. government official(s)
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = a$ />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = RefusingState val = "Refusing" />
    );
    PopulatedObjectClass "ConsequentActee" // e.g. demonstrators
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsRefusedState val = "Refused" />
    );
    PopulatedObjectClass "ConsequentExtra"
    (
      <ObjectFrameClass ref = CommunicationUnitRequestObjectFrameClass /> // e.g. a permit
      <ExtraParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+2) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveRepresentedItemsRefusedState val = "Refused" />
    );
  );
); // BehaviorClass "RefusingSomethingDueToScheduleConflictBehaviorClass"

//-----
//
// BehaviorClass: TalkerAdvocatesActionWithListenersWhoAnticipateSomething
//
// Actor: Talker
// Actee: Repr-Action
// Extra: Listener(s)
//
//-----
//
BehaviorClass "TalkerAdvocatesActionWithListenersWhoAnticipateSomething"
(
  <CausalRule val = "true" />
  <RuleDirection type = "Forward" />
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />

  Dictionary ( English
  (
    {
      "advocate",
      "advocated",
      "advocated",
      "advocates",
      "advocating"
    }
  )
  );

  PriorStates // (Antecedent)
  (
    PopulatedObjectClass "AntecedentActor" // Talker
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = CommunicatingState val = "Communicating" />
    );
    PopulatedObjectClass "AntecedentActee" // Repr-Action
    (
      <ObjectFrameClass ref = CommunicationUnitProposedActionObjectFrameClass /> // e.g. to do violence
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+2) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = PassiveIsCommunicatedState val = "NotCommunicated" />
    );
    PopulatedObjectClass "AntecedentExtra" // Listener(s)
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <Multiple val = "true" /> // Collection
      <ExtraParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = t1$ />
      <Attribute ref = CommunicationReceivedState val = "NotCommunicationReceived" />
    );
  );
  PostStates // (Consequent)
  (
    PopulatedObjectClass "ConsequentActor" // Talker
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = a$ />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = CommunicatingState val = "CommunicatingCompleted" />
    );
    PopulatedObjectClass "ConsequentActee" // Repr-Action
    (
      <ObjectFrameClass ref = CommunicationUnitProposedActionObjectFrameClass /> // e.g. to do violence
      <PassiveParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+2) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = PassiveIsCommunicatedState val = "Communicated" />
    );
    PopulatedObjectClass "ConsequentExtra" // Listener(s)
    (
      <ObjectFrameClass ref = PersonObjectFrameClass />
      <Multiple val = "true" /> // Collection
      <ExtraParticipant val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = (a$+1) />
      <Attribute ref = RelativeTime expr = (t1$+1) />
      <Attribute ref = CommunicationReceivedState val = "CommunicationReceived" />
      <Attribute ref = UniqueIdentityAttributeType var = extra$ />
    );
    BehaviorClassReference
    (
      <BehaviorClass ref = AnticipateHarmfulEventBehaviorClass />
      <ParameterActor ref = PersonObjectFrameClass expr = extra$ />
      <ParameterActee ref = CognitiveRepresentationOfHarmfulEvent />
    );
  );
); // BehaviorClass "TalkerAdvocatesActionWithListenersWhoAnticipateSomething"

// Entry point for the Winograd demonstration ontology.

#include <BasicDefinitions.h>
#include <EverydayObjectDefinitions.h>
#include <BehavioralDefinitions.h>
#include <Transforms.h>
#include <EarthboundObjectDefinitions.h>
#include <IntelligentAgentClasses.h>
#include <PersonClasses.h>
#include <InformationDefinitions.h>
#include <WinogradBehaviors.h>

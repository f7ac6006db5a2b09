"""Star ontology language toolkit: parser, Infopedia compiler, fact model and forward inference."""

__version__ = "0.1.0"

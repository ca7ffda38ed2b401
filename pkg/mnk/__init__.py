"""Command-line front end: settings, report models, job runner and rendering."""

__version__ = "0.1.0"

"""Commands package for the congest-apsp CLI."""

"""Packaged data files: sentiment lexicon, stopword list, query templates."""

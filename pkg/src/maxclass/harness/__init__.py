"""Exhaustive search over consistent prefixes and the verification reports built on it."""

from .search import SearchConfig, SearchResult, search_sequences

__all__ = ["SearchConfig", "SearchResult", "search_sequences"]

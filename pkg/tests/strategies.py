"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from tfplkit.dyck import enumerate_dyck, partitions


def dyck_words(min_n=1, max_n=6):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(enumerate_dyck(n)))


def word_pairs(min_n=1, max_n=3):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(st.sampled_from(enumerate_dyck(n)), st.sampled_from(enumerate_dyck(n)))
    )


def word_triples(min_n=1, max_n=3):
    def of_size(n):
        words = st.sampled_from(enumerate_dyck(n))
        return st.tuples(words, words, words)

    return st.integers(min_n, max_n).flatmap(of_size)


def shapes(max_size=6):
    return st.integers(0, max_size).flatmap(lambda k: st.sampled_from(partitions(k)))

def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def initials(words):
    letters = ''
    letters = letters + words[0][0]
    letters = letters + words[1][0]
    return letters

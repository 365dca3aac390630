def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def initials(words):
    letters = ''
    for k in range(2):
        letters = letters + words[k][0]
    return letters
# probe: initials(['grace', 'hopper', 'x'])

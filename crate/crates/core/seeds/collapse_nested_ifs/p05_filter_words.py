def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def long_capitalized(words):
    out = []
    for w in words:
        if len(w) > 3:
            if w[0] == w[0].upper():
                out.append(w)
    return out
# probe: long_capitalized(['Apple', 'pear', 'Fig', 'Banana'])

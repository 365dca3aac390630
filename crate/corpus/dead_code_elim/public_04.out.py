def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def clean(words):
    out = []
    for w in words:
        out.append(w.strip())
    return out

def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def with_header(values):
    out = ['header']
    for v in values:
        out.append(str(v))
    return out
# probe: with_header([1, 2])

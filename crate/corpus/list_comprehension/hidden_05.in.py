def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def absolute(values):
    mags = []
    for v in values:
        mags.append(abs(v))
    return max(mags)
# probe: absolute([-7, 3, 5])

def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def mode(x):
    if False:
        label = 'old'
    else:
        label = 'new'
    return label + str(x)
# probe: mode(3)

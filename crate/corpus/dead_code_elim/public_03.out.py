def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def mode(x):
    label = 'new'
    return label + str(x)

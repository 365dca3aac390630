def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def label(n):
    if n > 0:
        if n > 10:
            return 'big'
    else:
        return 'nonpositive'
    return 'small'
# probe: label(20)
# probe: label(5)
# probe: label(-1)

def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def vowels_in(text):
    found = []
    for ch in text:
        if ch in 'aeiou':
            found.append(ch)
    return found
# probe: vowels_in('education')

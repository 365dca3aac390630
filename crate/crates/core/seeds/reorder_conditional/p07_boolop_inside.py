def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def access(admin, owner):
    if not (admin or owner):
        return 'read only'
    else:
        return 'full'
# probe: access(False, False)
# probe: access(True, False)
